#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "suspec/rational.hpp"

namespace suspec {

enum class PrimeClass { Split, Inert, Ramified };

const char* to_string(PrimeClass c);

// Deterministic Miller-Rabin; inputs above 64 bits are rejected.
bool is_prime(const Int& n);

// Full Kronecker symbol (a/n), extended at 0, -1 and 2.
int kronecker_symbol(Int a, Int n);

// Imaginary quadratic field Q(sqrt(-k)) for squarefree k > 0.
// D = -k when k = 3 mod 4, else -4k; the conductor is |D|.
class QuadraticField {
public:
    explicit QuadraticField(long long k);

    long long k() const { return k_; }
    long long discriminant() const { return d_; }
    long long conductor() const { return -d_; }

    // The Kronecker character chi(n) = (D/n).
    int chi(const Int& n) const { return kronecker_symbol(Int(d_), n); }

    PrimeClass classify_prime(long long p) const;

    // Prime factors of the conductor, sorted.
    std::vector<long long> ramified_primes() const;

private:
    long long k_;
    long long d_;
};

QuadraticField make_field(long long k);

} // namespace suspec
