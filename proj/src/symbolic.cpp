#include "suspec/symbolic.hpp"

#include <json.hpp>

namespace suspec {

SymbolicReal SymbolicReal::operator*(const SymbolicReal& o) const {
    if (coeff_ == 0 || o.coeff_ == 0) return zero();
    long long d = abs_d_;
    if (sqrtd_exp_ != 0 && o.sqrtd_exp_ != 0 && abs_d_ != o.abs_d_)
        throw context_error("SymbolicReal: mismatched field contexts in product");
    if (d == 0) d = o.abs_d_;
    int sd = sqrtd_exp_ + o.sqrtd_exp_;
    if (sd == 0) d = 0;
    return SymbolicReal(coeff_ * o.coeff_, pi_exp_ + o.pi_exp_, sd, d);
}

SymbolicReal SymbolicReal::operator+(const SymbolicReal& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (pi_exp_ != o.pi_exp_ || sqrtd_exp_ != o.sqrtd_exp_ || abs_d_ != o.abs_d_)
        throw atom_error("SymbolicReal: addition of unlike atoms");
    return SymbolicReal(coeff_ + o.coeff_, pi_exp_, sqrtd_exp_, abs_d_);
}

SymbolicReal SymbolicReal::pow(long e) const {
    if (e == 0) return one();
    if (coeff_ == 0) {
        if (e < 0) throw std::domain_error("SymbolicReal: 0 to negative power");
        return zero();
    }
    long long se = static_cast<long long>(sqrtd_exp_) * e;
    return SymbolicReal(pow_rational(coeff_, e),
                        static_cast<int>(pi_exp_ * e),
                        static_cast<int>(se),
                        sqrtd_exp_ != 0 ? abs_d_ : 0);
}

std::optional<Rational> SymbolicReal::is_rational() const {
    if (pi_exp_ != 0 || sqrtd_exp_ % 2 != 0) return std::nullopt;
    Rational r = coeff_;
    if (sqrtd_exp_ != 0) r *= pow_rational(Rational(abs_d_), sqrtd_exp_ / 2);
    return r;
}

SymbolicReal SymbolicReal::fold_sqrtd() const {
    if (sqrtd_exp_ == 0 || sqrtd_exp_ % 2 != 0) return *this;
    return SymbolicReal(coeff_ * pow_rational(Rational(abs_d_), sqrtd_exp_ / 2),
                        pi_exp_, 0, 0);
}

Float SymbolicReal::to_float(unsigned precision_bits) const {
    PrecisionGuard guard(precision_bits + 32);
    Float v = suspec::to_float(coeff_);
    if (pi_exp_ != 0) v *= boost::multiprecision::pow(pi_value(), pi_exp_);
    if (sqrtd_exp_ != 0)
        v *= boost::multiprecision::pow(sqrt(Float(abs_d_)), sqrtd_exp_);
    return v;
}

std::string SymbolicReal::to_json() const {
    nlohmann::ordered_json j;
    j["coeff"] = suspec::to_string(coeff_);
    j["pi_exp"] = pi_exp_;
    j["sqrtD_exp"] = sqrtd_exp_;
    if (sqrtd_exp_ != 0) j["absD"] = abs_d_;
    return j.dump();
}

} // namespace suspec
