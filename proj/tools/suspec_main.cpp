#include <algorithm>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "suspec/applications.hpp"
#include "suspec/gauss.hpp"
#include "suspec/heisenberg.hpp"
#include "suspec/lfunctions.hpp"
#include "suspec/local.hpp"
#include "suspec/selfcheck.hpp"
#include "suspec/spectrum.hpp"

using json = nlohmann::ordered_json;
using namespace suspec;

namespace {

struct Config {
    std::string format = "json";
    unsigned precision_bits = 256;
    long long prime_bound = 10000;
};

std::vector<long long> parse_tau(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long long v = std::stoll(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad tau entry: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty tau list");
    return out;
}

json sym_json(const SymbolicReal& v) { return json::parse(v.to_json()); }

std::string sym_text(const SymbolicReal& v) {
    std::ostringstream os;
    os << "(" << to_string(v.coeff()) << ")";
    if (v.pi_exp() != 0) os << "*pi^" << v.pi_exp();
    if (v.sqrtd_exp() != 0) os << "*" << v.abs_d() << "^(" << v.sqrtd_exp() << "/2)";
    return os.str();
}

std::string float15(const Float& v) {
    std::ostringstream os;
    os << std::setprecision(15) << v.convert_to<double>();
    return os.str();
}

void emit_record(const Config& cfg, const json& j) {
    if (cfg.format == "human") {
        for (auto& [key, value] : j.items())
            std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                      << "\n";
    } else if (cfg.format == "csv") {
        std::string header, row;
        for (auto& [key, value] : j.items()) {
            if (!header.empty()) { header += ','; row += ','; }
            header += key;
            std::string cell = value.is_string() ? value.get<std::string>() : value.dump();
            if (cell.find(',') != std::string::npos || cell.find('"') != std::string::npos) {
                std::string quoted = "\"";
                for (char c : cell) { if (c == '"') quoted += '"'; quoted += c; }
                quoted += '"';
                cell = quoted;
            }
            row += cell;
        }
        std::cout << header << "\n" << row << "\n";
    } else {
        std::cout << j.dump() << "\n";
    }
}

std::optional<ErrorInputs> gather_error_inputs(double kappa, long long dime,
                                               double cuspvol, long long m) {
    if (kappa <= 0 && cuspvol <= 0) return std::nullopt;
    ErrorInputs err;
    err.kappa_abs = kappa;
    err.dim_e = dime;
    err.sum_cusp_vol = cuspvol;
    err.m = m;
    return err;
}

json multiplicity_json(const MultiplicityResult& r) {
    json j;
    j["main_term"] = sym_json(r.main_term.fold_sqrtd());
    if (r.exact) j["exact"] = to_string(*r.exact);
    if (r.error_bound) j["error_bound"] = *r.error_bound;
    j["h_m"] = r.h_m.str();
    j["integral_warning"] = r.integral_warning;
    return j;
}

HeisenbergElement random_heisenberg(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    HeisenbergElement e;
    for (int i = 0; i < n - 1; ++i)
        e.x.push_back({Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
    e.mu = Rational(num(rng), den(rng));
    return e;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact multiplicity, volume and L-value computations for SU(n,1) lattices"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "human"}))
        ->capture_default_str();
    app.add_option("--precision-bits", cfg.precision_bits, "Working precision in bits")
        ->check(CLI::Range(64u, 1u << 20))
        ->envname("SUSPEC_PRECISION_BITS")
        ->capture_default_str();
    app.add_option("--prime-bound", cfg.prime_bound, "Bound for numeric Euler products")
        ->check(CLI::Range(100LL, 100000000LL))
        ->envname("SUSPEC_PRIME_BOUND")
        ->capture_default_str();

    long long k = 1, p = 0, h1 = 1, h2 = 1, mm = 3, dime = 0, sweep_h = 1;
    long long trials = 100;
    unsigned long seed = 20240813;
    int n = 3, s = 2;
    double kappa = 0, cuspvol = 0;
    std::string tau_str, tau1_str, tau2_str, h_str = "1";
    std::vector<long long> sweep_k{1}, sweep_n{3};

    auto* c_field = app.add_subcommand("field", "Quadratic field data for Q(sqrt(-k))");
    c_field->add_option("--k", k, "Squarefree k > 0")->required();
    c_field->add_option("--p", p, "Optionally classify this prime");
    c_field->add_option("--n", n, "Optionally list the non-quasi-split primes for SU(n,1)");

    auto* c_lvalue = app.add_subcommand("lvalue", "L(s, chi) exactly and numerically");
    c_lvalue->add_option("--k", k)->required();
    c_lvalue->add_option("--s", s, "Odd s >= 3, or nonpositive even s")->required();
    unsigned numeric_bits = 0;
    c_lvalue->add_option("--numeric-bits", numeric_bits, "Precision of the numeric column");

    auto* c_zeta = app.add_subcommand("zeta", "zeta(s) for even s >= 2");
    c_zeta->add_option("--s", s)->required();

    auto* c_volume = app.add_subcommand("volume", "Lattice covolume in SU(n,1)");
    c_volume->add_option("--k", k)->required();
    c_volume->add_option("--n", n)->required();

    auto* c_mult = app.add_subcommand("multiplicity", "Discrete-series multiplicity in L^2(Gamma(m)\\G)");
    c_mult->set_help_flag("--help", "Print help"); // frees -h for the --h index option
    c_mult->add_option("--k", k)->required();
    c_mult->add_option("--n", n)->required();
    c_mult->add_option("--tau", tau_str, "Comma-separated strictly decreasing integers")->required();
    c_mult->add_option("--h", h_str, "Index h_m of Gamma(m) in Gamma")->required();
    c_mult->add_option("--m", mm, "Congruence level (even n error term)");
    c_mult->add_option("--kappa", kappa, "|kappa| for the even-n error constant");
    c_mult->add_option("--dime", dime, "dim E override (0 = derive from tau)");
    c_mult->add_option("--cuspvol", cuspvol, "Sum of cusp volumes");

    auto* c_coh = app.add_subcommand("cohomology", "Cuspidal cohomology lower bound in degree n");
    c_coh->set_help_flag("--help", "Print help");
    c_coh->add_option("--k", k)->required();
    c_coh->add_option("--n", n)->required();
    c_coh->add_option("--tau", tau_str)->required();
    c_coh->add_option("--h", h_str)->required();
    c_coh->add_option("--m", mm);
    c_coh->add_option("--kappa", kappa);
    c_coh->add_option("--dime", dime);
    c_coh->add_option("--cuspvol", cuspvol);

    auto* c_rat = app.add_subcommand("rationality", "Two-route rationality check for L(2n+1)");
    c_rat->add_option("--k", k)->required();
    c_rat->add_option("--n", n, "n >= 2; uses ranks 2n-1 and 2n+1")->required();
    c_rat->add_option("--tau1", tau1_str, "Parameter on rank 2n-1 (default staircase)");
    c_rat->add_option("--tau2", tau2_str, "Parameter on rank 2n+1 (default staircase)");
    c_rat->add_option("--h1", h1);
    c_rat->add_option("--h2", h2);

    auto* c_heis = app.add_subcommand("heisenberg-check", "Randomized exact Heisenberg-group checks");
    c_heis->add_option("--n", n);
    c_heis->add_option("--trials", trials);
    c_heis->add_option("--seed", seed);

    auto* c_self = app.add_subcommand("selfcheck", "Run all verification suites");

    auto* c_sweep = app.add_subcommand("sweep", "Covolume/multiplicity table over (k, n) grids");
    c_sweep->set_help_flag("--help", "Print help");
    c_sweep->add_option("--k", sweep_k, "k values")->required();
    c_sweep->add_option("--n", sweep_n, "n values")->required();
    c_sweep->add_option("--h", sweep_h, "h_m for the multiplicity column");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough(); // global flags may appear after the subcommand

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_field) {
            QuadraticField f = make_field(k);
            json j;
            j["k"] = f.k();
            j["discriminant"] = f.discriminant();
            j["conductor"] = f.conductor();
            j["ramified_primes"] = f.ramified_primes();
            if (c_field->count("--p")) j["class"] = to_string(f.classify_prime(p));
            if (c_field->count("--n")) j["t_ell"] = t_ell(f, n);
            emit_record(cfg, j);
        } else if (*c_lvalue) {
            QuadraticField f = make_field(k);
            unsigned bits = numeric_bits ? numeric_bits : cfg.precision_bits;
            json j;
            j["k"] = k;
            j["s"] = s;
            if (s >= 3 && s % 2 == 1) {
                SymbolicReal v = l_odd_exact(f, s);
                j["exact"] = sym_json(v);
                j["numeric"] = float15(l_numeric(f, s, bits));
                j["exact_numeric"] = float15(v.to_float(bits));
            } else if (s <= 0 && s % 2 == 0) {
                j["exact"] = to_string(l_value_negative_exact(f, static_cast<unsigned>(-s / 2)));
            } else {
                throw std::invalid_argument("lvalue: s must be odd >= 3 or a nonpositive even integer");
            }
            emit_record(cfg, j);
        } else if (*c_zeta) {
            emit_record(cfg, sym_json(zeta_even_exact(s)));
        } else if (*c_volume) {
            emit_record(cfg, sym_json(covolume(make_field(k), n).fold_sqrtd()));
        } else if (*c_mult || *c_coh) {
            QuadraticField f = make_field(k);
            HCParam tau(parse_tau(tau_str));
            Int h(h_str);
            auto err = gather_error_inputs(kappa, dime, cuspvol, mm);
            if (*c_mult) {
                emit_record(cfg, multiplicity_json(multiplicity(f, n, tau, h, err)));
            } else {
                CohomologyBound b = cusp_cohomology_lower_bound(f, n, tau, h, err);
                json j;
                j["lower_bound"] = sym_json(b.lower_bound.fold_sqrtd());
                if (b.defect) j["defect"] = *b.defect;
                else if (n % 2 == 0) j["note"] = "bound requires C";
                emit_record(cfg, j);
            }
        } else if (*c_rat) {
            QuadraticField f = make_field(k);
            auto [d1, d2] = remark_parameters(n);
            HCParam t1 = tau1_str.empty() ? d1 : HCParam(parse_tau(tau1_str));
            HCParam t2 = tau2_str.empty() ? d2 : HCParam(parse_tau(tau2_str));
            RationalityReport rep = rationality_report(f, n, t1, t2, Int(h1), Int(h2));
            json j;
            j["lhs"] = to_string(rep.lhs);
            j["rhs"] = to_string(rep.rhs);
            j["equal"] = rep.equal;
            emit_record(cfg, j);
            if (!rep.equal) return 2;
        } else if (*c_heis) {
            if (n < 2) throw std::invalid_argument("heisenberg-check: n must be >= 2");
            std::mt19937 rng(seed);
            bool ok = true;
            for (long long t = 0; t < trials; ++t) {
                HeisenbergElement a = random_heisenberg(n, rng);
                HeisenbergElement b = random_heisenberg(n, rng);
                ok = ok && matrix_mul(heisenberg_matrix(a), heisenberg_matrix(b)) ==
                               heisenberg_matrix(heisenberg_mul(a, b));
                ok = ok && preserves_signature_form(heisenberg_matrix(a));
                ok = ok && heisenberg_matrix(heisenberg_mul(a, heisenberg_inverse(a))) ==
                               heisenberg_matrix(HeisenbergElement{
                                   std::vector<CRational>(a.x.size()), Rational(0)});
            }
            json j;
            j["n"] = n;
            j["trials"] = trials;
            j["pass"] = ok;
            emit_record(cfg, j);
            if (!ok) return 2;
        } else if (*c_self) {
            selfcheck::Options opts;
            opts.precision_bits = cfg.precision_bits;
            opts.prime_bound = cfg.prime_bound;
            auto results = selfcheck::run_all(opts);
            bool all = true;
            if (cfg.format == "human") {
                for (const auto& r : results) {
                    std::cout << (r.pass ? "ok " : "FAIL ") << r.id << " - " << r.name
                              << " (" << std::fixed << std::setprecision(2) << r.seconds
                              << "s) " << r.detail << "\n";
                    all = all && r.pass;
                }
            } else {
                json arr = json::array();
                for (const auto& r : results) {
                    arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass},
                                   {"detail", r.detail}});
                    all = all && r.pass;
                }
                json j;
                j["suites"] = arr;
                j["pass"] = all;
                std::cout << j.dump() << "\n";
            }
            if (!all) return 2;
        } else if (*c_sweep) {
            std::sort(sweep_k.begin(), sweep_k.end());
            std::sort(sweep_n.begin(), sweep_n.end());
            std::cout << "k,n,tau,covolume_exact,covolume_float,"
                         "multiplicity_exact,multiplicity_float\n";
            for (long long kk : sweep_k) {
                QuadraticField f = make_field(kk);
                for (long long nn : sweep_n) {
                    std::vector<long long> staircase;
                    for (long long i = nn; i >= 1; --i) staircase.push_back(i);
                    HCParam tau(staircase);
                    SymbolicReal vol = covolume(f, static_cast<int>(nn)).fold_sqrtd();
                    std::cout << kk << "," << nn << ",\"";
                    for (size_t i = 0; i < staircase.size(); ++i)
                        std::cout << (i ? "," : "") << staircase[i];
                    std::cout << "\"," << sym_text(vol) << ","
                              << float15(vol.to_float(cfg.precision_bits));
                    MultiplicityResult m =
                        multiplicity(f, static_cast<int>(nn), tau, Int(sweep_h));
                    if (m.exact)
                        std::cout << "," << to_string(*m.exact) << ","
                                  << float15(to_float(*m.exact));
                    else
                        std::cout << "," << sym_text(m.main_term.fold_sqrtd()) << ","
                                  << float15(m.main_term.to_float(cfg.precision_bits));
                    std::cout << "\n";
                }
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
