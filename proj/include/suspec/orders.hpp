#pragma once

#include "suspec/field.hpp"
#include "suspec/local.hpp"

namespace suspec {

// Finite classical groups over F_p used by the local volume factors.
struct GroupKind {
    enum Family { SL, SU, Sp, SO_odd, SO2minus };
    Family family;
    int m = 0; // matrix size; unused for SO2minus

    static GroupKind sl(int m) { return {SL, m}; }
    static GroupKind su(int m) { return {SU, m}; }
    static GroupKind sp(int m);
    static GroupKind so_odd(int m);
    static GroupKind so2_minus() { return {SO2minus, 2}; }
};

Int group_order(const GroupKind& kind, long long p);

// Dimension of the algebraic group behind a kind.
long group_dimension(const GroupKind& kind);

// Local Euler factor p^dim / |Mbar(F_p)| at p, computed through the
// finite group orders (closed-form fallback at the p = 2 ramified
// even-n corner, where the SO order formula needs p odd).
Rational euler_factor(const QuadraticField& field, long long p, int n);

// Same factor from the closed-form products of the case table.
Rational euler_factor_closed(const QuadraticField& field, long long p, int n);

// lambda_p = (p^(n+1) - 1) / (p + 1) for p in T_ell, n odd.
Rational lambda_p(const QuadraticField& field, long long p, int n);

// lambda_p through the order route
// p^((dim Mbar - dim Mscr)/2) |Mscr(F_p)| / |Mbar(F_p)|
// with Mbar = Sp_{n-1} x SO2minus and Mscr = Sp_{n+1}.
Rational lambda_p_order_route(const QuadraticField& field, long long p, int n);

} // namespace suspec
