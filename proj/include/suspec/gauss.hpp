#pragma once

#include "suspec/bigfloat.hpp"
#include "suspec/field.hpp"

namespace suspec {

// G(1, chi) = sum_{r=1}^{|D|} chi(r) e^{2 pi i r / |D|} by direct summation.
// Purely imaginary of modulus sqrt(|D|); the sign is observed, not assumed.
Complex gauss_sum_numeric(const QuadraticField& field, unsigned precision_bits = 128);

// Observed sign of G/(i sqrt(|D|)), +1 or -1.
int gauss_sum_sign(const QuadraticField& field);

} // namespace suspec
