#include "suspec/bigfloat.hpp"

#include <boost/math/constants/constants.hpp>

namespace suspec {

Float pi_value() { return boost::math::constants::pi<Float>(); }

Float to_float(const Rational& r) {
    return Float(numerator(r)) / Float(denominator(r));
}

} // namespace suspec
