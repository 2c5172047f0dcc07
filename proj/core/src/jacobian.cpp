#include "mjet/jacobian.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "mjet/errors.hpp"

namespace mjet {

double jacobian(const Eigen::MatrixXd& L) {
    const int r = static_cast<int>(L.rows());
    const int n = static_cast<int>(L.cols());
    if (r > n) throw DimensionError("jacobian: more rows than columns");
    if (r == 1) return L.row(0).norm();
    if (r == 2) {
        const double a = L.row(0).squaredNorm();
        const double b = L.row(0).dot(L.row(1));
        const double c = L.row(1).squaredNorm();
        return std::sqrt(std::max(a * c - b * b, 0.0));
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(L);
    double jac = 1.0;
    for (int i = 0; i < r; ++i) jac *= svd.singularValues()[i];
    return jac;
}

namespace {

void require_spd(const Eigen::MatrixXd& g) {
    if (g.rows() != g.cols()) throw DimensionError("metric must be square");
    if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + g.cwiseAbs().maxCoeff()))
        throw DimensionError("metric must be symmetric");
    Eigen::LLT<Eigen::MatrixXd> llt(g);
    if (llt.info() != Eigen::Success) throw DimensionError("metric must be positive definite");
}

}  // namespace

Eigen::MatrixXd MetricField::at(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd m = g(x);
    require_spd(m);
    return m;
}

double gamma_r(const Eigen::MatrixXd& g, const Subspace& G) {
    require_spd(g);
    if (G.ambient_dim() != g.rows()) throw DimensionError("gamma_r: dimension mismatch");
    if (G.dim() == 0) return 1.0;
    const Eigen::MatrixXd restricted = G.basis().transpose() * g * G.basis();
    return std::sqrt(restricted.determinant());
}

double jacobian_g(const Eigen::MatrixXd& L, const Eigen::MatrixXd& g) {
    require_spd(g);
    if (L.cols() != g.rows()) throw DimensionError("jacobian_g: dimension mismatch");
    // g-adjoint of L is g^{-1} L^T, so Jac_g(L) = det(L g^{-1} L^T)^{1/2}.
    const Eigen::MatrixXd m = L * g.llt().solve(L.transpose());
    return std::sqrt(std::max(m.determinant(), 0.0));
}

Subspace kernel_subspace(const Eigen::MatrixXd& L) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(L, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double tol =
        std::max(L.rows(), L.cols()) * 2.2e-16 * (sv.size() > 0 ? sv[0] : 0.0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > tol) ++rank;
    return Subspace(svd.matrixV().rightCols(L.cols() - rank));
}

}  // namespace mjet
