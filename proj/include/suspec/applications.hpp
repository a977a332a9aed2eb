#pragma once

#include "suspec/spectrum.hpp"

namespace suspec {

// dim H^i(g, k, pi_tau (x) F): C in degree n when the coefficient system
// matches, zero everywhere else.
int gk_cohomology_dim(int n, int degree, bool coefficient_matches);

struct CohomologyBound {
    SymbolicReal lower_bound;
    std::optional<double> defect; // n even, when error inputs were supplied
};

// dim H^n_cusp >= multiplicity main term (minus the defect when n is even).
CohomologyBound cusp_cohomology_lower_bound(const QuadraticField& field, int n,
                                            const HCParam& tau, const Int& h_m,
                                            const std::optional<ErrorInputs>& err = std::nullopt);

// sqrt(|D|) L(2n+1) / (2 pi)^(2n+1), folded to an exact rational.
Rational rationality_lhs(const QuadraticField& field, int n);

// The same quantity assembled from the two multiplicities of SU(2n-1,1)
// and SU(2n+1,1); independent of the h choices.
Rational rationality_rhs(const QuadraticField& field, int n, const HCParam& tau1,
                         const HCParam& tau2, const Int& h1, const Int& h2,
                         long long m1 = 3, long long m2 = 3);

struct RationalityReport {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

RationalityReport rationality_report(const QuadraticField& field, int n,
                                     const HCParam& tau1, const HCParam& tau2,
                                     const Int& h1, const Int& h2);

// prod_{i<2n} (tau1_i - tau1_{2n}) / prod_{i<j<=2n+2, j>=2n} (tau2_i - tau2_j).
Rational tau_product_ratio(int n, const HCParam& tau1, const HCParam& tau2);

// The stated closed-form simplification of that ratio for the staircase
// parameters; returned for comparison, not asserted correct.
Rational remark_closed_form(int n);

// The staircase choice tau_i = 2n+2-i on ranks 2n-1 and 2n+1.
std::pair<HCParam, HCParam> remark_parameters(int n);

} // namespace suspec
