// Shared scalar/matrix aliases, error taxonomy and small numeric helpers.

#ifndef NHG_TYPES_HPP
#define NHG_TYPES_HPP

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nhg {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Bad configuration files, malformed expressions, invalid CLI arguments.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem problems (missing scenario file, unwritable output directory).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arguments outside an operation's domain (x = 0 for a density, t beyond the horizon).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integration/quadrature breakdowns: step-size underflow, blow-up, non-finite fields.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operator 2-norm (largest singular value). All norms in reports use this.
double operator_norm(const Mat& M);

/// Smallest eigenvalue of a symmetric matrix (input is symmetrized first).
double min_eigenvalue_sym(const Mat& M);

/// Largest eigenvalue of a symmetric matrix (input is symmetrized first).
double max_eigenvalue_sym(const Mat& M);

/// n equally spaced points covering [a, b] (n >= 2), endpoints exact.
std::vector<double> linspace(double a, double b, int n);

/// Coefficient matrix A(t) of the linear system x' = A(t)x.
struct TimeDependentMatrix {
    std::function<void(double, Mat&)> eval;
    int dimension = 0;
    std::optional<double> bound_hint;  // sup of operator norm over the horizon, if known

    void eval_into(double t, Mat& out) const;
    Mat operator()(double t) const;
};

}  // namespace nhg

#endif
