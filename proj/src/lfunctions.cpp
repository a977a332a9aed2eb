#include "suspec/lfunctions.hpp"

#include "suspec/bernoulli.hpp"
#include "suspec/gauss.hpp"

namespace suspec {

SymbolicReal zeta_even_exact(int s) {
    if (s < 2 || s % 2 != 0)
        throw std::domain_error("zeta_even_exact: s must be even and >= 2");
    // zeta(s) = (-1)^(s/2+1) (2 pi)^s B_s / (2 s!)
    Rational q = bernoulli(static_cast<unsigned>(s)) * pow_rational(Rational(2), s) /
                 (2 * Rational(factorial(static_cast<unsigned>(s))));
    if ((s / 2 + 1) % 2 != 0) q = -q;
    return SymbolicReal(q, s, 0);
}

Rational generalized_bernoulli(const QuadraticField& field, unsigned n) {
    if (n < 1) throw std::domain_error("generalized_bernoulli: n must be >= 1");
    long long f = field.conductor();
    Rational sum = 0;
    for (long long a = 1; a <= f; ++a) {
        int c = field.chi(Int(a));
        if (c == 0) continue;
        sum += c * bernoulli_poly(n, Rational(a, f));
    }
    return pow_rational(Rational(f), static_cast<long>(n) - 1) * sum;
}

Rational l_value_negative_exact(const QuadraticField& field, unsigned m) {
    return -generalized_bernoulli(field, 2 * m + 1) / Rational(2 * m + 1);
}

SymbolicReal l_odd_exact(const QuadraticField& field, int s) {
    if (s < 3 || s % 2 == 0)
        throw std::domain_error("l_odd_exact: s must be odd and >= 3");
    int m = (s - 1) / 2;
    // sqrt(|D|) L(2m+1) / (2 pi)^(2m+1) = +- (-1)^m / (2 |D|^(2m) (2m)!) L(-2m, chi)
    Rational q = l_value_negative_exact(field, static_cast<unsigned>(m)) *
                 pow_rational(Rational(2), 2 * m) /
                 (pow_rational(Rational(field.conductor()), 2 * m) *
                  Rational(factorial(static_cast<unsigned>(2 * m))));
    if (m % 2 != 0) q = -q;
    if (q < 0) q = -q; // L(s, chi) > 0 for real s > 1 by the Euler product
    return SymbolicReal(q, s, -1, field.conductor());
}

SymbolicReal z_ell(const QuadraticField& field, int s) {
    if (s < 2) throw std::domain_error("z_ell: s must be >= 2");
    return s % 2 == 0 ? zeta_even_exact(s) : l_odd_exact(field, s);
}

namespace {

// Hurwitz zeta(s, x) for s > 1, 0 < x <= 1, by Euler-Maclaurin.
Float hurwitz_zeta(const Float& s, const Float& x, unsigned bits) {
    long n_direct = std::max<long>(24, bits / 3);
    Float sum = 0;
    for (long j = 0; j < n_direct; ++j)
        sum += pow(x + j, -s);
    Float base = x + n_direct;
    sum += pow(base, 1 - s) / (s - 1);
    Float bpow = pow(base, -s);
    sum += bpow / 2;
    // Asymptotic tail: B_{2r}/(2r)! * (s)_{2r-1} * base^(-s-2r+1)
    Float rising = s;         // (s)_{2r-1} for r = 1
    Float binv = 1 / base;
    Float term_scale = bpow * binv; // base^(-s-1)
    Float eps = pow(Float(2), -static_cast<long>(bits) - 8);
    Float prev_mag = 0;
    for (unsigned r = 1; r <= 80; ++r) {
        Rational c = bernoulli(2 * r) / Rational(factorial(2 * r));
        Float term = to_float(c) * rising * term_scale;
        Float mag = abs(term);
        if (r > 1 && mag > prev_mag) break; // series turned divergent
        sum += term;
        if (mag < eps * abs(sum)) break;
        prev_mag = mag;
        rising *= (s + (2 * r - 1)) * (s + 2 * r);
        term_scale *= binv * binv;
    }
    return sum;
}

} // namespace

Float l_numeric(const QuadraticField& field, double s, unsigned precision_bits) {
    if (!(s > 1)) throw std::domain_error("l_numeric: s must be > 1");
    PrecisionGuard guard(precision_bits + 32);
    long long f = field.conductor();
    Float fs(s);
    Float sum = 0;
    for (long long a = 1; a <= f; ++a) {
        int c = field.chi(Int(a));
        if (c == 0) continue;
        sum += c * hurwitz_zeta(fs, Float(a) / Float(f), precision_bits + 16);
    }
    return sum * pow(Float(f), -fs);
}

TruncatedSum l_series_truncated(const QuadraticField& field, double s, long long terms,
                                unsigned precision_bits) {
    if (!(s > 1)) throw std::domain_error("l_series_truncated: s must be > 1");
    PrecisionGuard guard(precision_bits + 32);
    Float fs(s);
    Float sum = 0;
    for (long long n = 1; n <= terms; ++n) {
        int c = field.chi(Int(n));
        if (c == 0) continue;
        sum += c * pow(Float(n), -fs);
    }
    Float bound = Float(field.conductor()) * pow(Float(terms), -fs) / (fs - 1);
    return {sum, bound};
}

Float functional_equation_residual(const QuadraticField& field, int s,
                                   unsigned precision_bits) {
    if (s < 2) throw std::domain_error("functional_equation_residual: s must be >= 2");
    PrecisionGuard guard(precision_bits + 32);
    long long f = field.conductor();
    // Exact route: L(1-s, chi) = -B_{s,chi} / s.
    Float lhs = to_float(-generalized_bernoulli(field, static_cast<unsigned>(s)) / s);
    // Numeric route.  chi(-1) = -1, so the phase factor is -2i sin(pi s / 2)
    // and only the imaginary parts survive.
    Float pi = pi_value();
    Float prefactor = pow(Float(f), s - 1) * to_float(Rational(factorial(s - 1))) /
                      pow(2 * pi, s);
    Complex phase{Float(0), Float(-2) * sin(pi * s / 2)};
    Complex g = gauss_sum_numeric(field, precision_bits + 32);
    Float lnum = l_numeric(field, static_cast<double>(s), precision_bits);
    Complex rhs = prefactor * (phase * g);
    rhs = lnum * rhs;
    Float abs_rhs = sqrt(rhs.abs2());
    Float diff = sqrt((Complex{lhs, Float(0)} - rhs).abs2());
    Float floor_eps = pow(Float(2), -static_cast<long>(precision_bits));
    return diff / (abs_rhs > floor_eps ? abs_rhs : floor_eps);
}

} // namespace suspec
