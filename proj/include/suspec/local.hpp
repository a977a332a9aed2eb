#pragma once

#include <vector>

#include "suspec/field.hpp"

namespace suspec {

// Hilbert symbol (a,b)_p: +1 iff z^2 = a x^2 + b y^2 has a nontrivial
// p-adic solution.  Closed formulas, separate branches for p odd and p = 2.
int hilbert_symbol(Int a, Int b, long long p);

// Whether a (= +1 or -1) is a norm from the completion of the field at p,
// i.e. (a, -k)_p = +1.
bool is_local_norm(const QuadraticField& field, long long p, int a);

// Primes where SU(n,1) over the field fails to be locally quasi-split:
// empty unless n = 3 mod 4, in which case it is the ramified primes
// where -1 is not a local norm.
std::vector<long long> t_ell(const QuadraticField& field, int n);

} // namespace suspec
