#include "suspec/local.hpp"

namespace suspec {

namespace {

int legendre(Int a, long long p) {
    return kronecker_symbol(std::move(a), Int(p));
}

} // namespace

int hilbert_symbol(Int a, Int b, long long p) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    if (!is_prime(Int(p))) throw std::invalid_argument("hilbert_symbol: p is not prime");
    long alpha = 0, beta = 0;
    while (a % p == 0) { a /= p; ++alpha; }
    while (b % p == 0) { b /= p; ++beta; }
    if (p != 2) {
        int eps = ((p - 1) / 2) % 2; // parity of (p-1)/2
        int sign = (alpha * beta * eps) % 2 ? -1 : 1;
        if (beta % 2) sign *= legendre(a, p);
        if (alpha % 2) sign *= legendre(b, p);
        return sign;
    }
    auto eps2 = [](const Int& u) {
        Int m = u % 4;
        if (m < 0) m += 4;
        return m == 3 ? 1 : 0; // (u-1)/2 mod 2
    };
    auto omega2 = [](const Int& u) {
        Int m = u % 8;
        if (m < 0) m += 8;
        return (m == 3 || m == 5) ? 1 : 0; // (u^2-1)/8 mod 2
    };
    long e = eps2(a) * eps2(b) + alpha * omega2(b) + beta * omega2(a);
    return e % 2 ? -1 : 1;
}

bool is_local_norm(const QuadraticField& field, long long p, int a) {
    if (a != 1 && a != -1) throw std::invalid_argument("is_local_norm: a must be +1 or -1");
    if (a == 1) return true;
    return hilbert_symbol(Int(a), Int(-field.k()), p) == 1;
}

std::vector<long long> t_ell(const QuadraticField& field, int n) {
    if (n < 3) throw std::invalid_argument("t_ell: n must be >= 3");
    if (n % 2 == 0 || ((n - 1) / 2) % 2 == 0) return {};
    std::vector<long long> out;
    for (long long p : field.ramified_primes())
        if (!is_local_norm(field, p, -1)) out.push_back(p);
    return out;
}

} // namespace suspec
