#include "nhg/types.hpp"

#include <cmath>

namespace nhg {

double operator_norm(const Mat& M) {
    if (M.rows() == 1 && M.cols() == 1) return std::abs(M(0, 0));
    Eigen::JacobiSVD<Mat> svd(M);
    return svd.singularValues()(0);
}

double min_eigenvalue_sym(const Mat& M) {
    Mat sym = 0.5 * (M + M.transpose());
    Eigen::SelfAdjointEigenSolver<Mat> es(sym, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double max_eigenvalue_sym(const Mat& M) {
    Mat sym = 0.5 * (M + M.transpose());
    Eigen::SelfAdjointEigenSolver<Mat> es(sym, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> out(static_cast<size_t>(n));
    if (n == 1) {
        out[0] = a;
        return out;
    }
    double h = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = a + h * i;
    out.back() = b;
    return out;
}

void TimeDependentMatrix::eval_into(double t, Mat& out) const {
    if (out.rows() != dimension || out.cols() != dimension) out.resize(dimension, dimension);
    eval(t, out);
}

Mat TimeDependentMatrix::operator()(double t) const {
    Mat out(dimension, dimension);
    eval(t, out);
    return out;
}

}  // namespace nhg
