// Adaptive ODE integration (Dormand-Prince 5(4), cubic Hermite dense output),
// transition matrices of x' = A(t)x, nonlinear flows and their variational
// (Jacobian) flows. Everything downstream consumes these.

#ifndef NHG_ODE_HPP
#define NHG_ODE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "nhg/scenario.hpp"
#include "nhg/types.hpp"

namespace nhg {

/// Right-hand side y' = field(t, y); writes into the preallocated output.
using Field = std::function<void(double, const Vec&, Vec&)>;

struct IntegrateOptions {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    double max_step = 0.0;       // 0 = unlimited
    long max_steps = 4000000;
    double magnitude_guard = 1e9;  // |y| beyond this reports blow-up
};

/// Dense solution of one IVP: accepted nodes plus field values for the cubic
/// Hermite interpolant. Node times are strictly increasing even when the
/// integration ran backward.
struct Trajectory {
    std::vector<double> times;
    std::vector<Vec> states;
    std::vector<Vec> derivs;
    int interpolant_order = 3;
    double tol = 0.0;
    bool reversed = false;  // integration direction was t1 < t0

    double t_min() const { return times.front(); }
    double t_max() const { return times.back(); }
    /// Cubic Hermite value between nodes; DomainError outside [t_min, t_max].
    Vec value(double t) const;
    void value_into(double t, Vec& out) const;
    /// State at the integration target time (t1 of the originating call).
    const Vec& endpoint() const { return reversed ? states.front() : states.back(); }
};

/// Integrates field from (t0, y0) to t1 (either direction), keeping dense output.
Trajectory integrate_ivp(const Field& field, double t0, const Vec& y0, double t1,
                         const IntegrateOptions& opt = {});

/// Same integration without node storage; returns y(t1).
Vec integrate_endpoint(const Field& field, double t0, const Vec& y0, double t1,
                       const IntegrateOptions& opt = {});

/// X(t, s): solves M' = A(tau) M, M(s) = I from tau = s to tau = t (either order).
Mat transition_matrix(const TimeDependentMatrix& A, double s, double t, double tol = 1e-9);

/// Cached transition matrices X(t_j, t_i), j >= i, over an ordered time grid.
struct PropagatorTable {
    std::vector<double> grid;
    int dimension = 0;
    double tol = 0.0;
    std::vector<Mat> blocks;  // triangular layout, see index()

    size_t index(int j, int i) const;          // j >= i
    const Mat& block(int j, int i) const;      // X(grid[j], grid[i]), j >= i
    int size() const { return static_cast<int>(grid.size()); }
};

PropagatorTable build_propagator_table(const TimeDependentMatrix& A, std::vector<double> grid,
                                       double tol = 1e-9);

/// Nonlinear flow y(t, tau, eta) of y' = A(t)y + f(t,y) as a dense trajectory.
Trajectory nonlinear_flow(const Scenario& scenario, double tau, const Vec& eta, double t,
                          double tol = 1e-9);

/// Endpoint-only nonlinear flow (no dense output, no step cap).
Vec nonlinear_flow_endpoint(const Scenario& scenario, double tau, const Vec& eta, double t,
                            double tol = 1e-9);

/// Linear flow x(t, tau, xi) = X(t, tau) xi as a dense trajectory.
Trajectory linear_flow(const Scenario& scenario, double tau, const Vec& xi, double t,
                       double tol = 1e-9);

/// Flow and variational solution: y = y(t,tau,eta) and J = dy/deta(t,tau,eta),
/// integrated jointly (J' = [A + Df(t,y)] J, J(tau) = I).
std::pair<Vec, Mat> flow_and_jacobian(const Scenario& scenario, double tau, const Vec& eta,
                                      double t, double tol = 1e-9);

/// det dy/deta from the variational flow next to the trace-integral route
/// exp(int tr[A + Df] ds). Both must be positive and agree to ~1e-5 relative.
struct LiouvilleCheck {
    double det_jacobian = 0.0;
    double det_quadrature = 0.0;
    double rel_gap() const;
    bool pass(double tol = 1e-5) const;
};

LiouvilleCheck liouville_det_check(const Scenario& scenario, double tau, const Vec& eta, double t,
                                   double tol = 1e-9);

}  // namespace nhg

#endif
