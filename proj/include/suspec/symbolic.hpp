#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "suspec/bigfloat.hpp"
#include "suspec/rational.hpp"

namespace suspec {

struct context_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct atom_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Exact value q * pi^a * |D|^(b/2).  The field context is carried as |D|;
// it is absent (abs_d == 0) exactly when the sqrt exponent is zero.
// Zero is canonical: coeff 0 forces both exponents to 0.
class SymbolicReal {
public:
    SymbolicReal() = default;
    explicit SymbolicReal(Rational c) : coeff_(std::move(c)) {}
    SymbolicReal(Rational c, int pi_exp, int sqrtd_exp, long long abs_d = 0)
        : coeff_(std::move(c)), pi_exp_(pi_exp), sqrtd_exp_(sqrtd_exp), abs_d_(abs_d) {
        if (sqrtd_exp_ != 0 && abs_d_ <= 0)
            throw context_error("SymbolicReal: sqrtD exponent without field context");
        if (sqrtd_exp_ == 0) abs_d_ = 0;
        normalize();
    }

    static SymbolicReal zero() { return SymbolicReal(); }
    static SymbolicReal one() { return SymbolicReal(Rational(1)); }

    const Rational& coeff() const { return coeff_; }
    int pi_exp() const { return pi_exp_; }
    int sqrtd_exp() const { return sqrtd_exp_; }
    long long abs_d() const { return abs_d_; }
    bool is_zero() const { return coeff_ == 0; }

    SymbolicReal operator*(const SymbolicReal& o) const;
    SymbolicReal operator+(const SymbolicReal& o) const;
    SymbolicReal operator*(const Rational& r) const { return *this * SymbolicReal(r); }

    SymbolicReal pow(long e) const;

    bool operator==(const SymbolicReal& o) const {
        return coeff_ == o.coeff_ && pi_exp_ == o.pi_exp_ &&
               sqrtd_exp_ == o.sqrtd_exp_ && abs_d_ == o.abs_d_;
    }

    // coeff * |D|^(sqrtD/2) as a Rational, when pi_exp = 0 and sqrtD is even.
    std::optional<Rational> is_rational() const;

    // Folds even sqrtD powers into the coefficient; pi_exp untouched.
    SymbolicReal fold_sqrtd() const;

    Float to_float(unsigned precision_bits = 256) const;

    std::string to_json() const;

private:
    void normalize() {
        if (coeff_ == 0) {
            pi_exp_ = 0;
            sqrtd_exp_ = 0;
            abs_d_ = 0;
        }
    }

    Rational coeff_ = 0;
    int pi_exp_ = 0;
    int sqrtd_exp_ = 0;
    long long abs_d_ = 0;
};

inline SymbolicReal operator*(const Rational& r, const SymbolicReal& s) { return s * r; }

} // namespace suspec
