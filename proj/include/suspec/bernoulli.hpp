#pragma once

#include "suspec/rational.hpp"

namespace suspec {

// B_n in the t/(e^t - 1) convention, so B_1 = -1/2.
// Memoized; concurrent readers are safe.
Rational bernoulli(unsigned n);

// B_n(x) = sum_k C(n,k) B_k x^(n-k).
Rational bernoulli_poly(unsigned n, const Rational& x);

} // namespace suspec
