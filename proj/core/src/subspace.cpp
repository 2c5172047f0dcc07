#include "mjet/subspace.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "mjet/errors.hpp"

namespace mjet {

Subspace::Subspace(Eigen::MatrixXd basis) : basis_(std::move(basis)) {
    if (basis_.rows() < basis_.cols())
        throw DimensionError("Subspace: more columns than ambient dimension");
    if (basis_.cols() > 0) {
        const Eigen::MatrixXd gram = basis_.transpose() * basis_;
        const double err =
            (gram - Eigen::MatrixXd::Identity(basis_.cols(), basis_.cols())).cwiseAbs().maxCoeff();
        if (err > 1e-10)
            throw DimensionError("Subspace: basis not orthonormal (deviation " +
                                 std::to_string(err) + ")");
    }
}

Subspace Subspace::from_span(const Eigen::MatrixXd& span) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(span);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(span.rows(), span.cols());
    return Subspace(std::move(q));
}

Eigen::MatrixXd Subspace::complement_basis() const {
    const int n = ambient_dim();
    const int d = dim();
    if (d == 0) return Eigen::MatrixXd::Identity(n, n);
    // Full QR of the basis; the trailing columns of Q span the complement.
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis_);
    Eigen::MatrixXd q = qr.householderQ();
    return q.rightCols(n - d);
}

double Subspace::projection_residual(const Eigen::VectorXd& v) const {
    if (v.size() != ambient_dim()) throw DimensionError("Subspace: vector dimension mismatch");
    return (v - basis_ * (basis_.transpose() * v)).norm();
}

double Subspace::containment_residual(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim())
        throw DimensionError("Subspace: ambient dimension mismatch");
    double worst = 0.0;
    for (int c = 0; c < other.dim(); ++c)
        worst = std::max(worst, projection_residual(other.basis_.col(c)));
    return worst;
}

double subspace_angle(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim())
        throw DimensionError("subspace_angle: shape mismatch");
    if (a.dim() == 0) return 0.0;
    const Eigen::MatrixXd rejected = b.basis() - a.basis() * (a.basis().transpose() * b.basis());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(rejected);
    const double s = std::min(svd.singularValues()[0], 1.0);
    return std::asin(s);
}

Subspace subspace_intersection(const std::vector<Subspace>& spaces) {
    if (spaces.empty()) throw DimensionError("subspace_intersection: no subspaces");
    const int n = spaces[0].ambient_dim();
    int total_codim = 0;
    for (const auto& s : spaces) {
        if (s.ambient_dim() != n) throw DimensionError("subspace_intersection: ambient mismatch");
        total_codim += s.codim();
    }
    Eigen::MatrixXd constraints(total_codim, n);
    int row = 0;
    for (const auto& s : spaces) {
        Eigen::MatrixXd comp = s.complement_basis();
        constraints.middleRows(row, s.codim()) = comp.transpose();
        row += s.codim();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(constraints, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double tol =
        std::max(constraints.rows(), constraints.cols()) * 1e-15 * (sv.size() > 0 ? sv[0] : 0.0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > tol) ++rank;
    return Subspace(svd.matrixV().rightCols(n - rank));
}

}  // namespace mjet
