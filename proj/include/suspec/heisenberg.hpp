#pragma once

#include <vector>

#include "suspec/rational.hpp"

namespace suspec {

// Gaussian rational a + b i.
struct CRational {
    Rational re = 0;
    Rational im = 0;

    CRational() = default;
    CRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

    CRational conj() const { return {re, -im}; }
    bool operator==(const CRational&) const = default;
};

inline CRational operator+(const CRational& a, const CRational& b) {
    return {a.re + b.re, a.im + b.im};
}
inline CRational operator-(const CRational& a, const CRational& b) {
    return {a.re - b.re, a.im - b.im};
}
inline CRational operator*(const CRational& a, const CRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CRational operator-(const CRational& a) { return {-a.re, -a.im}; }

using CMatrix = std::vector<std::vector<CRational>>;

// Element u(x, mu) of the Heisenberg group N: x in C^(n-1), mu real.
struct HeisenbergElement {
    std::vector<CRational> x;
    Rational mu = 0;

    int n() const { return static_cast<int>(x.size()) + 1; }
};

// u(x1,m1) u(x2,m2) = u(x1+x2, m1+m2+Im<x1,x2>), <x,y> = sum x_i conj(y_i).
HeisenbergElement heisenberg_mul(const HeisenbergElement& a, const HeisenbergElement& b);

HeisenbergElement heisenberg_inverse(const HeisenbergElement& a);

// The explicit (n+1)x(n+1) matrix of u(x, mu); preserves S_{n,1} exactly.
CMatrix heisenberg_matrix(const HeisenbergElement& e);

CMatrix matrix_mul(const CMatrix& a, const CMatrix& b);

// M^dagger S_{n,1} M == S_{n,1} with S_{n,1} = diag(1,...,1,-1).
bool preserves_signature_form(const CMatrix& m);

} // namespace suspec
