#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace suspec {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// x^e for integer e, negative exponents allowed.
inline Rational pow_rational(const Rational& x, long e) {
    if (e == 0) return 1;
    if (x == 0) {
        if (e < 0) throw std::domain_error("pow_rational: 0 to negative power");
        return 0;
    }
    Rational base = x;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational acc = 1;
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    if (e < 0) acc = Rational(1) / acc;
    return acc;
}

inline Int pow_int(const Int& x, unsigned long e) {
    Int acc = 1, base = x;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// "a/b", or just "a" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

} // namespace suspec
