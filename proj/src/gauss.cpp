#include "suspec/gauss.hpp"

namespace suspec {

Complex gauss_sum_numeric(const QuadraticField& field, unsigned precision_bits) {
    if (precision_bits < 64) throw std::invalid_argument("gauss_sum_numeric: need >= 64 bits");
    PrecisionGuard guard(precision_bits + 32);
    long long f = field.conductor();
    Float two_pi_over_f = 2 * pi_value() / Float(f);
    Complex g{Float(0), Float(0)};
    for (long long r = 1; r <= f; ++r) {
        int c = field.chi(Int(r));
        if (c == 0) continue;
        Float angle = two_pi_over_f * Float(r);
        g.re += c * cos(angle);
        g.im += c * sin(angle);
    }
    return g;
}

int gauss_sum_sign(const QuadraticField& field) {
    Complex g = gauss_sum_numeric(field);
    return g.im > 0 ? 1 : -1;
}

} // namespace suspec
