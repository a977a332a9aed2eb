#include "suspec/field.hpp"

#include <algorithm>

namespace suspec {

const char* to_string(PrimeClass c) {
    switch (c) {
        case PrimeClass::Split: return "split";
        case PrimeClass::Inert: return "inert";
        case PrimeClass::Ramified: return "ramified";
    }
    return "?";
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n > Int(UINT64_MAX))
        throw std::domain_error("is_prime: input exceeds 64 bits");
    uint64_t v = n.convert_to<uint64_t>();
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (v == p) return true;
        if (v % p == 0) return false;
    }
    uint64_t d = v - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for all 64-bit integers.
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod(a, d, v);
        if (x == 1 || x == v - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, v);
            if (x == v - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int kronecker_symbol(Int a, Int n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int k = 1;
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    if (v % 2 == 1) {
        Int am8 = a % 8;
        if (am8 < 0) am8 += 8;
        if (am8 == 3 || am8 == 5) k = -1;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // n now odd and positive: Jacobi with quadratic reciprocity.
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            Int nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) k = -k;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) k = -k;
        a %= n;
    }
    return n == 1 ? k : 0;
}

QuadraticField::QuadraticField(long long k) : k_(k) {
    if (k < 1) throw std::invalid_argument("QuadraticField: k must be positive");
    for (long long d = 2; d * d <= k; ++d)
        if (k % (d * d) == 0)
            throw std::invalid_argument("QuadraticField: k must be squarefree");
    d_ = (k % 4 == 3) ? -k : -4 * k;
}

PrimeClass QuadraticField::classify_prime(long long p) const {
    if (!is_prime(Int(p))) throw std::invalid_argument("classify_prime: p is not prime");
    if (d_ % p == 0) return PrimeClass::Ramified;
    return chi(Int(p)) == 1 ? PrimeClass::Split : PrimeClass::Inert;
}

std::vector<long long> QuadraticField::ramified_primes() const {
    std::vector<long long> out;
    long long m = conductor();
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

QuadraticField make_field(long long k) { return QuadraticField(k); }

} // namespace suspec
