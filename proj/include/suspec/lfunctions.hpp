#pragma once

#include "suspec/field.hpp"
#include "suspec/symbolic.hpp"

namespace suspec {

// zeta(s) = q * pi^s for even s >= 2, from the Bernoulli identity
// zeta(2n+2) = (-1)^n (2 pi)^(2n+2) B_{2n+2} / (2 (2n+2)!).
SymbolicReal zeta_even_exact(int s);

// Generalized Bernoulli number B_{n,chi} with f = |D|:
//   B_{n,chi} = f^(n-1) sum_{a=1}^{f} chi(a) B_n(a/f).
Rational generalized_bernoulli(const QuadraticField& field, unsigned n);

// L(-2m, chi) = -B_{2m+1,chi} / (2m+1), an exact rational.
Rational l_value_negative_exact(const QuadraticField& field, unsigned m);

// L(s, chi) for odd s = 2m+1 >= 3, as q * pi^s * |D|^(-1/2) with q > 0.
// The functional-equation sign ambiguity is resolved by positivity.
SymbolicReal l_odd_exact(const QuadraticField& field, int s);

// Z(s): zeta(s) for even s, L(s, chi) for odd s.
SymbolicReal z_ell(const QuadraticField& field, int s);

// L(s, chi) numerically, via Hurwitz-zeta Euler-Maclaurin summation.
Float l_numeric(const QuadraticField& field, double s, unsigned precision_bits = 256);

// Plain truncated character sum; second member is the Abel tail bound
// |D| N^(-s) / (s-1).
struct TruncatedSum {
    Float value;
    Float tail_bound;
};
TruncatedSum l_series_truncated(const QuadraticField& field, double s, long long terms,
                                unsigned precision_bits = 128);

// |LHS - RHS| / |RHS| for the functional equation
//   L(1-s,chi) = (f^(s-1) Gamma(s) / (2 pi)^s)
//                (e^(-i pi s/2) + chi(-1) e^(i pi s/2)) G(1,chi) L(s,chi),
// with the left side from the exact Bernoulli route and the right side numeric.
Float functional_equation_residual(const QuadraticField& field, int s,
                                   unsigned precision_bits = 256);

} // namespace suspec
