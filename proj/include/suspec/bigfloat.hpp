#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <cmath>

#include "suspec/rational.hpp"

namespace suspec {

using Float = boost::multiprecision::mpfr_float;

inline unsigned digits10_for_bits(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 5;
}

// Scopes the thread-local default mpfr precision.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits)
        : saved_(Float::default_precision()) {
        Float::default_precision(digits10_for_bits(bits));
    }
    ~PrecisionGuard() { Float::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

Float pi_value();

Float to_float(const Rational& r);

struct Complex {
    Float re, im;
    Float abs2() const { return re * re + im * im; }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Float& s, const Complex& a) { return {s * a.re, s * a.im}; }

} // namespace suspec
