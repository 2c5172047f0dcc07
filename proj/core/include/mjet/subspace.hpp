#pragma once

#include <Eigen/Core>
#include <vector>

namespace mjet {

/// Point of a Grassmannian: a subspace of R^N of codimension k, stored as
/// an N x (N-k) matrix with orthonormal columns. We follow the codimension
/// convention throughout because the kernels of evaluation maps have fixed
/// codimension p, not fixed dimension.
class Subspace {
public:
    /// basis: N x (N-k) with orthonormal columns (checked to 1e-10).
    explicit Subspace(Eigen::MatrixXd basis);

    /// Orthonormalizes the span of the given (full-column-rank) matrix.
    static Subspace from_span(const Eigen::MatrixXd& span);

    int ambient_dim() const { return static_cast<int>(basis_.rows()); }
    int dim() const { return static_cast<int>(basis_.cols()); }
    int codim() const { return ambient_dim() - dim(); }
    const Eigen::MatrixXd& basis() const { return basis_; }

    /// Orthonormal basis of the orthogonal complement.
    Eigen::MatrixXd complement_basis() const;

    /// || (I - B B^T) v || -- distance from v to the subspace.
    double projection_residual(const Eigen::VectorXd& v) const;
    /// Largest column-wise residual of the other subspace's basis, i.e.
    /// how far `other` sticks out of this subspace. Zero iff other <= this.
    double containment_residual(const Subspace& other) const;

private:
    Eigen::MatrixXd basis_;
};

/// Largest principal angle between two subspaces of equal dimension, in
/// radians. Computed from sin(theta_i) = sigma_i((I - B_A B_A^T) B_B), which
/// stays accurate for nearly equal subspaces.
double subspace_angle(const Subspace& a, const Subspace& b);

/// Intersection of subspaces via their stacked orthogonal complements:
/// a vector lies in every S_i iff it is orthogonal to every complement.
Subspace subspace_intersection(const std::vector<Subspace>& spaces);

}  // namespace mjet
