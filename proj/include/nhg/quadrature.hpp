// Adaptive Simpson quadrature for the smooth scalar integrands of the
// hypothesis checks (p, q, domination, Liouville trace integrals).

#ifndef NHG_QUADRATURE_HPP
#define NHG_QUADRATURE_HPP

#include <functional>

namespace nhg {

/// Integral of f over [a, b] (sign flips when a > b). Throws NumericalError
/// when the recursion cannot reach the requested tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 40);

/// Minimizer of a unimodal function on [a, b] by golden-section search.
double golden_section_max(const std::function<double(double)>& f, double a, double b,
                          double x_tol = 1e-10);

}  // namespace nhg

#endif
