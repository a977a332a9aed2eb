#include "suspec/spectrum.hpp"

#include <cmath>

#include "suspec/lfunctions.hpp"
#include "suspec/orders.hpp"

namespace suspec {

HCParam::HCParam(std::vector<long long> taus) : taus_(std::move(taus)) {
    if (taus_.size() < 3) throw std::invalid_argument("HCParam: need n >= 3");
    long long sum = 0;
    for (size_t i = 0; i < taus_.size(); ++i) {
        if (i > 0 && taus_[i - 1] <= taus_[i])
            throw std::invalid_argument("HCParam: entries must be strictly decreasing");
        sum += taus_[i];
    }
    tau_last_ = -sum;
}

long long HCParam::tau(int i) const {
    if (i < 1 || i > n() + 1) throw std::out_of_range("HCParam::tau");
    return i <= n() ? taus_[i - 1] : tau_last_;
}

ParamFlags validate(const HCParam& tau) {
    ParamFlags f;
    int n = tau.n();
    f.regular_dominant = tau.tau(n) > tau.tau_last();
    f.integrable = tau.tau(n) > tau.tau_last() + n;
    bool coh = true;
    for (int i = 1; i <= n && coh; ++i) {
        for (int j = i + 1; j <= n; ++j)
            if (tau.tau(i) + i < tau.tau(j) + j) {
                coh = false;
                break;
            }
        if (tau.tau(i) <
            tau.tau_last() + static_cast<long long>(n) * (n + 1) / 2 + n + 1 - i)
            coh = false;
    }
    f.cohomological = coh;
    return f;
}

SymbolicReal formal_degree(const HCParam& tau) {
    int n = tau.n();
    if (!validate(tau).regular_dominant)
        throw std::domain_error("formal_degree: parameter is singular");
    Rational q = pow_rational(Rational(4), -n);
    for (int i = 1; i <= n; ++i) {
        Int prod = 1;
        for (int j = i + 1; j <= n + 1; ++j) prod *= Int(tau.tau(i) - tau.tau(j));
        if (prod < 0) prod = -prod;
        q *= Rational(prod, factorial(static_cast<unsigned>(i - 1)));
    }
    return SymbolicReal(q, -n, 0);
}

Int weyl_dim(const std::vector<Rational>& w) {
    size_t n = w.size();
    for (size_t i = 0; i + 1 < n; ++i) {
        if (w[i] < w[i + 1]) throw std::domain_error("weyl_dim: weight must be weakly decreasing");
        if (!is_integer(w[i] - w[i + 1]))
            throw std::domain_error("weyl_dim: differences must be integral");
    }
    Rational r = 1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            r *= (w[i] - w[j] + Rational(j - i)) / Rational(j - i);
    if (!is_integer(r)) throw std::logic_error("weyl_dim: non-integral result");
    return numerator(r);
}

Rational s_exponent(int n) {
    if (n < 3) throw std::invalid_argument("s_exponent: n must be >= 3");
    return n % 2 == 1 ? Rational(static_cast<long long>(n - 1) * (n + 2), 4)
                      : Rational(static_cast<long long>(n) * (n + 3), 4);
}

SymbolicReal covolume(const QuadraticField& field, int n) {
    if (n < 3) throw std::invalid_argument("covolume: n must be >= 3");
    Rational s2 = 2 * s_exponent(n); // always an integer
    SymbolicReal v(Rational(1), n, static_cast<int>(s2.convert_to<long long>()),
                   field.conductor());
    Rational pref = 1;
    int pi_down = 0;
    for (int i = 1; i <= n; ++i) {
        pref *= Rational(factorial(static_cast<unsigned>(i - 1)),
                         pow_int(Int(2), static_cast<unsigned long>(i) + 1));
        pi_down += i + 1;
    }
    v = v * SymbolicReal(pref, -pi_down, 0);
    for (int s = 2; s <= n + 1; ++s) v = v * z_ell(field, s);
    for (long long p : t_ell(field, n)) v = v * SymbolicReal(lambda_p(field, p, n));
    return v;
}

MultiplicityResult multiplicity(const QuadraticField& field, int n, const HCParam& tau,
                                const Int& h_m, const std::optional<ErrorInputs>& err) {
    if (tau.n() != n) throw std::invalid_argument("multiplicity: tau has wrong rank");
    if (h_m < 1) throw std::invalid_argument("multiplicity: h_m must be >= 1");
    if (!validate(tau).integrable)
        throw std::domain_error("multiplicity: parameter is not integrable");
    MultiplicityResult res;
    res.h_m = h_m;
    res.main_term = formal_degree(tau) * covolume(field, n) * SymbolicReal(Rational(h_m));
    if (n % 2 == 1) {
        auto exact = res.main_term.is_rational();
        if (!exact)
            throw std::logic_error("multiplicity: odd-n main term failed to fold to a rational");
        res.exact = *exact;
        res.integral_warning = !is_integer(*exact);
    } else if (err) {
        Int dim_e = err->dim_e > 0 ? err->dim_e : dim_e_from_tau(tau);
        double c = error_constant(n, field.k(), err->kappa_abs, dim_e, err->sum_cusp_vol);
        res.error_bound =
            c * h_m.convert_to<double>() / std::pow(static_cast<double>(err->m), n);
    }
    return res;
}

double error_constant(int n, long long k, double kappa_abs, const Int& dim_e,
                      double sum_cusp_vol) {
    if (n % 2 != 0) throw std::domain_error("error_constant: n must be even");
    if (k < 1 || dim_e < 1 || sum_cusp_vol < 0 || kappa_abs < 0)
        throw std::invalid_argument("error_constant: inputs must be positive");
    double base = static_cast<double>(k) / (8.0 * (n + 1));
    return kappa_abs * dim_e.convert_to<double>() * sum_cusp_vol /
           std::pow(base, n / 2);
}

std::optional<Rational> SqrtBound::exact() const {
    Int num = numerator(inside), den = denominator(inside);
    Int rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return scale * Rational(rn, rd);
}

double SqrtBound::to_double() const {
    return scale.convert_to<double>() * std::sqrt(inside.convert_to<double>());
}

SqrtBound n2_volume_lower_bound(long long k, int n, long long m) {
    if (m < 3) throw std::invalid_argument("n2_volume_lower_bound: m must be >= 3");
    return {Rational(m), Rational(k, 8LL * (n + 1))};
}

double positivity_threshold(const QuadraticField& field, int n, const HCParam& tau,
                            double c) {
    if (c < 0) throw std::invalid_argument("positivity_threshold: C must be >= 0");
    if (!validate(tau).integrable)
        throw std::domain_error("positivity_threshold: parameter is not integrable");
    SymbolicReal dv = formal_degree(tau) * covolume(field, n);
    double denom = dv.to_float(128).convert_to<double>();
    return std::pow(std::fabs(c / denom), 1.0 / n);
}

std::vector<Rational> delta_k(int n) {
    std::vector<Rational> d;
    d.reserve(n);
    for (int i = 1; i <= n; ++i) d.emplace_back(n + 1 - 2 * i, 2);
    return d;
}

Int dim_e_from_tau(const HCParam& tau) {
    auto dk = delta_k(tau.n());
    std::vector<Rational> w;
    w.reserve(tau.n());
    for (int i = 1; i <= tau.n(); ++i) w.push_back(Rational(tau.tau(i)) - dk[i - 1]);
    return weyl_dim(w);
}

} // namespace suspec
