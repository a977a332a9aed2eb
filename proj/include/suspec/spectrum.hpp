#pragma once

#include <optional>
#include <vector>

#include "suspec/field.hpp"
#include "suspec/symbolic.hpp"

namespace suspec {

// Harish-Chandra parameter (tau_1, ..., tau_n), strictly decreasing
// integers; tau_{n+1} = -sum tau_i is always derived.
class HCParam {
public:
    explicit HCParam(std::vector<long long> taus);

    int n() const { return static_cast<int>(taus_.size()); }
    const std::vector<long long>& taus() const { return taus_; }
    long long tau(int i) const; // 1-based, i in [1, n+1]
    long long tau_last() const { return tau_last_; }

private:
    std::vector<long long> taus_;
    long long tau_last_;
};

struct ParamFlags {
    bool regular_dominant = false;
    bool integrable = false;
    bool cohomological = false;
};

ParamFlags validate(const HCParam& tau);

// Formal degree d_tau = (4 pi)^(-n) prod_i |prod_{j>i} (tau_i - tau_j)| / (i-1)!
SymbolicReal formal_degree(const HCParam& tau);

// Weyl dimension formula: prod_{i<j} (l_i - l_j + j - i) / (j - i).
Int weyl_dim(const std::vector<Rational>& highest_weight);

// Exponent of |D| in the covolume: (n-1)(n+2)/4 for n odd, n(n+3)/4 even.
Rational s_exponent(int n);

// vol(Gamma \ G) as an exact symbolic value; pi exponent is always n.
SymbolicReal covolume(const QuadraticField& field, int n);

struct ErrorInputs {
    double kappa_abs = 0;
    Int dim_e = 0; // 0 = derive from tau via the Weyl formula
    double sum_cusp_vol = 0;
    long long m = 3;
};

struct MultiplicityResult {
    SymbolicReal main_term;
    std::optional<Rational> exact;     // n odd
    std::optional<double> error_bound; // n even, when error inputs supplied
    Int h_m;
    bool integral_warning = false; // n odd and the exact value is not an integer
};

MultiplicityResult multiplicity(const QuadraticField& field, int n, const HCParam& tau,
                                const Int& h_m,
                                const std::optional<ErrorInputs>& err = std::nullopt);

// C = kappa * dim_E * sum_cusp_vol / (k / (8(n+1)))^(n/2); n even only.
double error_constant(int n, long long k, double kappa_abs, const Int& dim_e,
                      double sum_cusp_vol);

// Lower bound sqrt(k / (8(n+1))) * m for the central cusp volume,
// kept as m * sqrt(q) with q rational.
struct SqrtBound {
    Rational scale;  // m
    Rational inside; // k / (8(n+1))
    std::optional<Rational> exact() const; // when inside is a rational square
    double to_double() const;
};
SqrtBound n2_volume_lower_bound(long long k, int n, long long m);

// |C / (d_tau vol)|^(1/n).
double positivity_threshold(const QuadraticField& field, int n, const HCParam& tau, double c);

// Half sum delta_K = ((n-1)/2, (n-3)/2, ..., -(n-1)/2) as rationals.
std::vector<Rational> delta_k(int n);

// dim E_{tau - delta_K} via the Weyl formula.
Int dim_e_from_tau(const HCParam& tau);

} // namespace suspec
