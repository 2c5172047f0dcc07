#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "mjet/jet_covariance.hpp"

namespace mjet {

/// Conditional law of the rows outside `value_rows` given that the value
/// rows vanish: the zero-mean Gaussian with the Schur complement
///   Sigma_dd - Sigma_dv Sigma_vv^{-1} Sigma_vd.
/// Throws DegenerateConditioningError when the value block is numerically
/// singular (diagonal proximity or a degenerate field). Immutable after
/// construction; draws are safe from multiple threads.
class CondGaussian {
public:
    CondGaussian(const Eigen::MatrixXd& joint, const std::vector<int>& value_rows);
    CondGaussian(const JetCov& jc, const std::vector<int>& value_rows);

    const Eigen::MatrixXd& covariance() const { return cond_cov_; }
    /// Rows of the original matrix that remain (in ascending order).
    const std::vector<int>& kept_rows() const { return kept_rows_; }
    /// det(2 pi Sigma_vv)^{1/2} -- the Kac-Rice denominator.
    double value_density_norm() const { return value_norm_; }
    int dim() const { return static_cast<int>(cond_cov_.rows()); }

    /// Draws from the conditional distribution. Eigendecomposition-based,
    /// with eigenvalues in [-1e-10 * max_eig, 0] clamped to zero; deeper
    /// negatives throw NotPositiveSemiDefiniteError at construction.
    Eigen::VectorXd draw(std::uint64_t seed, std::uint64_t index) const;

private:
    Eigen::MatrixXd cond_cov_;
    std::vector<int> kept_rows_;
    double value_norm_ = 0.0;
    Eigen::MatrixXd transform_;  // Q sqrt(clamped Lambda)
};

}  // namespace mjet
