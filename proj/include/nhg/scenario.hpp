// Problem instances: the linear coefficient A(t), the perturbation f(t,y) with
// its bound/Lipschitz envelopes, the rate envelope (D, mu, alpha), grids, and
// the builtin catalog with closed-form oracles.

#ifndef NHG_SCENARIO_HPP
#define NHG_SCENARIO_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nhg/types.hpp"

namespace nhg {

using json = nlohmann::json;

enum class EnvelopeFamily {
    Uniform,
    GeneralizedExponential,
    MuStability,
    Nonuniform,
    GeneralizedNonuniform,
    Custom,
};

std::string to_string(EnvelopeFamily family);

/// Rate envelope of the contraction bound ||X(t,s)|| <= D(s) (mu(t)/mu(s))^-alpha.
struct RateEnvelope {
    std::function<double(double)> D;
    std::function<double(double)> mu;
    std::function<double(double)> mu_prime;
    double alpha = 1.0;
    EnvelopeFamily family = EnvelopeFamily::Custom;
};

/// Perturbation f(t,y) with declared bound beta(t) and Lipschitz envelope gamma(t).
struct Nonlinearity {
    std::function<void(double, const Vec&, Vec&)> f;
    std::function<void(double, const Vec&, Mat&)> Df;  // null when r = 0
    std::function<double(double)> beta;
    std::function<double(double)> gamma;
    int smoothness_order = 0;  // r

    bool has_jacobian() const { return static_cast<bool>(Df); }
    Vec f_at(double t, const Vec& y) const;
    Mat Df_at(double t, const Vec& y) const;
};

/// Default grids and sampling windows for the verification sweeps.
struct GridSpec {
    int time_nodes = 201;       // uniform time grid on [0, T_max]
    Vec state_lo, state_hi;     // sampling box in state space
    int samples = 100;          // default sample count for residual sweeps
    double conj_horizon = 5.0;  // largest t used when sampling the conjugacy maps
    double basin_horizon = 30.0;
    double capture_radius = 1e-3;
    double quad_tol = 1e-10;
};

/// Closed forms attached to builtins; used as oracles, never as the computation path.
struct ClosedFormOracle {
    std::function<Mat(double, double)> X;                         // X(t, s)
    std::function<Vec(double, double, const Vec&)> y;             // y(t, tau, eta), optional
};

struct Scenario {
    std::string name;
    int dimension = 1;
    TimeDependentMatrix A;
    Nonlinearity nonlinearity;
    RateEnvelope envelope;
    double T_max = 10.0;
    GridSpec grids;
    std::optional<Vec> equilibrium;
    std::optional<ClosedFormOracle> oracle;
    json config;  // source document (builtins embed theirs), enables save round-trips

    std::vector<double> time_grid() const { return linspace(0.0, T_max, grids.time_nodes); }
};

/// Builds a scenario from a config document (see README for the schema).
/// With strict=true the sampled (P2) check escalates from warning to error.
Scenario load_scenario(const json& config, bool strict = false);
Scenario load_scenario_file(const std::string& path, bool strict = false);

/// Re-emits the schema document a scenario was built from.
json save_scenario(const Scenario& scenario);

/// name in {uniform-1d, uniform-2d, mu-poly, nonuniform-bv, lipschitz-decay}.
Scenario builtin_scenario(const std::string& name);
std::vector<std::string> builtin_scenario_names();

/// Variants with a shifted equilibrium (ybar != 0) used by the equilibrium
/// diagnostics: "uniform-1d-shifted", "mu-poly-shifted".
Scenario scenario_variant(const std::string& name);
std::vector<std::string> scenario_variant_names();

/// Builtin name, then variant name, then filesystem path.
Scenario resolve_scenario(const std::string& source, bool strict = false);

/// Sampled evidence for the (P2) bounds; never a proof. Zero violations expected
/// for every builtin.
struct PerturbationBoundCheck {
    long samples = 0;
    long bound_violations = 0;      // |f(t,y)| > beta(t)
    long lipschitz_violations = 0;  // |f(t,y)-f(t,ybar)| > gamma(t) |y-ybar|
    double worst_bound_excess = 0.0;
    double worst_lipschitz_excess = 0.0;
    bool pass() const { return bound_violations == 0 && lipschitz_violations == 0; }
};
PerturbationBoundCheck check_perturbation_bounds(const Scenario& scenario, long samples,
                                                 uint64_t seed);

struct EquilibriumReport {
    double max_residual = 0.0;           // max over grid of |A(t) ybar + f(t, ybar)|
    double max_integral_residual = 0.0;  // max over grid of |ybar - X(t,0) ybar - int X f|
    bool pass = false;
    double tolerance = 1e-9;
    // second-candidate probe (numerical echo of the uniqueness lemma)
    bool second_checked = false;
    bool second_rejected = false;     // second candidate fails the residual test
    double second_distance = 0.0;     // |ybar2 - ybar| when both pass
    double second_residual = 0.0;
};

EquilibriumReport verify_equilibrium(const Scenario& scenario, const Vec& ybar,
                                     const std::optional<Vec>& second_candidate = {},
                                     double tolerance = 1e-9);

}  // namespace nhg

#endif
