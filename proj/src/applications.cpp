#include "suspec/applications.hpp"

#include "suspec/bernoulli.hpp"
#include "suspec/lfunctions.hpp"
#include "suspec/local.hpp"

namespace suspec {

int gk_cohomology_dim(int n, int degree, bool coefficient_matches) {
    if (n < 3 || degree < 0 || degree > 2 * n)
        throw std::invalid_argument("gk_cohomology_dim: degree out of range");
    return (coefficient_matches && degree == n) ? 1 : 0;
}

CohomologyBound cusp_cohomology_lower_bound(const QuadraticField& field, int n,
                                            const HCParam& tau, const Int& h_m,
                                            const std::optional<ErrorInputs>& err) {
    ParamFlags f = validate(tau);
    if (!f.cohomological)
        throw std::domain_error("cusp_cohomology_lower_bound: tau is not cohomological");
    MultiplicityResult m = multiplicity(field, n, tau, h_m, err);
    return {m.main_term, m.error_bound};
}

Rational rationality_lhs(const QuadraticField& field, int n) {
    if (n < 1) throw std::invalid_argument("rationality_lhs: n must be >= 1");
    SymbolicReal l = l_odd_exact(field, 2 * n + 1);
    SymbolicReal v = l * SymbolicReal(pow_rational(Rational(2), -(2 * n + 1)),
                                      -(2 * n + 1), 0) *
                     SymbolicReal(Rational(1), 0, 1, field.conductor());
    auto r = v.is_rational();
    if (!r) throw std::logic_error("rationality_lhs: failed to fold to a rational");
    return *r;
}

namespace {

void check_corollary_shape(int n, const HCParam& tau1, const HCParam& tau2) {
    if (n < 2) throw std::domain_error("rationality: n must be >= 2");
    if (tau1.n() != 2 * n - 1 || tau2.n() != 2 * n + 1)
        throw std::domain_error("rationality: tau ranks must be 2n-1 and 2n+1");
    for (int i = 1; i <= 2 * n - 1; ++i)
        if (tau1.tau(i) != tau2.tau(i))
            throw std::domain_error("rationality: tau1 and tau2 must agree below 2n");
    if (!validate(tau1).integrable || !validate(tau2).integrable)
        throw std::domain_error("rationality: parameters must be integrable");
}

} // namespace

Rational tau_product_ratio(int n, const HCParam& tau1, const HCParam& tau2) {
    check_corollary_shape(n, tau1, tau2);
    Rational num = 1;
    for (int i = 1; i < 2 * n; ++i)
        num *= Rational(tau1.tau(i) - tau1.tau(2 * n));
    Rational den = 1;
    for (int j = 2 * n; j <= 2 * n + 2; ++j)
        for (int i = 1; i < j; ++i)
            den *= Rational(tau2.tau(i) - tau2.tau(j));
    return num / den;
}

Rational rationality_rhs(const QuadraticField& field, int n, const HCParam& tau1,
                         const HCParam& tau2, const Int& h1, const Int& h2,
                         long long m1, long long m2) {
    check_corollary_shape(n, tau1, tau2);
    if (m1 < 3 || m2 < 3) throw std::domain_error("rationality: m must be >= 3");
    MultiplicityResult mult1 = multiplicity(field, 2 * n - 1, tau1, h1);
    MultiplicityResult mult2 = multiplicity(field, 2 * n + 1, tau2, h2);
    Rational r = *mult2.exact / *mult1.exact;
    r *= Rational(32 * h1, h2);
    r *= tau_product_ratio(n, tau1, tau2);
    for (long long p : t_ell(field, 2 * n - 1))
        r *= Rational(pow_int(Int(p), 2 * static_cast<unsigned long>(n)) - 1, Int(p) + 1);
    for (long long p : t_ell(field, 2 * n + 1))
        r *= Rational(Int(p) + 1, pow_int(Int(p), 2 * static_cast<unsigned long>(n) + 2) - 1);
    // |D|^(-2n): solving the multiplicity-ratio identity for the L-value
    // moves |D|^((4n+1)/2) to this side as |D|^(1/2 - (4n+1)/2).
    r *= pow_rational(Rational(field.conductor()), -2L * n);
    Rational bern = bernoulli(2 * static_cast<unsigned>(n) + 2);
    if (n % 2 != 0) bern = -bern;
    r *= Rational(factorial(2 * static_cast<unsigned>(n) + 2)) / bern;
    return r;
}

RationalityReport rationality_report(const QuadraticField& field, int n,
                                     const HCParam& tau1, const HCParam& tau2,
                                     const Int& h1, const Int& h2) {
    RationalityReport rep;
    rep.lhs = rationality_lhs(field, n);
    rep.rhs = rationality_rhs(field, n, tau1, tau2, h1, h2);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

Rational remark_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("remark_closed_form: n must be >= 2");
    Rational r(1, factorial(2 * static_cast<unsigned>(n) - 1) *
                      factorial(2 * static_cast<unsigned>(n)) *
                      Int(2LL * n * n + 3 * n + 2));
    for (long long i = 1; i < 2 * n; ++i)
        r *= Rational(2LL * n * n + 5 * n - i, 2LL * n * n + 5 * n + 3 - i);
    return r;
}

std::pair<HCParam, HCParam> remark_parameters(int n) {
    if (n < 2) throw std::invalid_argument("remark_parameters: n must be >= 2");
    std::vector<long long> t1, t2;
    for (int i = 1; i <= 2 * n - 1; ++i) t1.push_back(2 * n + 2 - i);
    for (int i = 1; i <= 2 * n + 1; ++i) t2.push_back(2 * n + 2 - i);
    return {HCParam(t1), HCParam(t2)};
}

} // namespace suspec
