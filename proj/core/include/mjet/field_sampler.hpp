#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "mjet/jet_covariance.hpp"

namespace mjet {

/// One exact joint Gaussian realization of (chosen derivatives of) a field
/// on a grid. Regenerating with the same seed and grid reproduces the
/// values bit-identically.
struct FieldSample {
    std::vector<Eigen::VectorXd> grid;
    std::vector<MultiIndex> derivatives;
    /// values(row, site) for row = derivative slot (component-major inside),
    /// matching JetCov ordering flattened per site.
    Eigen::VectorXd stacked;
    std::uint64_t seed;

    /// Value of derivative slot d, component c, at site s.
    double at(int site, int component, int deriv_slot, int components, int deriv_count) const {
        return stacked[(site * components + component) * deriv_count + deriv_slot];
    }
};

/// Factorizes the jet covariance of a kernel on a grid once and draws
/// exact Gaussian samples from it. Factorization is a symmetric
/// eigendecomposition: after one shot of diagonal jitter (1e-12 * trace/N),
/// eigenvalues in [-1e-10 * max_eig, 0] are clamped to zero (genuinely
/// degenerate directions, e.g. a rank-two cosine kernel, are legitimate);
/// anything lower fails loudly rather than masking an indefinite matrix.
class FieldSampler {
public:
    FieldSampler(const CovKernel& kernel, std::vector<Eigen::VectorXd> grid,
                 std::vector<MultiIndex> derivatives, int components = 1);

    /// Dimension of one stacked draw.
    int size() const { return static_cast<int>(transform_.rows()); }
    int site_count() const { return static_cast<int>(grid_.size()); }
    int component_count() const { return components_; }
    const std::vector<MultiIndex>& derivatives() const { return derivs_; }
    const std::vector<Eigen::VectorXd>& grid() const { return grid_; }
    double min_eigenvalue() const { return min_eig_; }

    /// Draw `index` of the stream rooted at `seed`; bit-identical for fixed
    /// (seed, index) no matter which thread executes it.
    Eigen::VectorXd draw(std::uint64_t seed, std::uint64_t index) const;

    FieldSample sample(std::uint64_t seed, std::uint64_t index = 0) const;

private:
    std::vector<Eigen::VectorXd> grid_;
    std::vector<MultiIndex> derivs_;
    int components_;
    Eigen::MatrixXd transform_;  // Q * sqrt(clamped Lambda)
    double min_eig_ = 0.0;
};

/// Convenience one-shot draw with every |alpha| <= order.
FieldSample sample_field(const CovKernel& kernel, const std::vector<Eigen::VectorXd>& grid,
                         const std::vector<MultiIndex>& derivatives, std::uint64_t seed,
                         int components = 1);

/// Uniform 1-D grid helper: count sites from a to b inclusive.
std::vector<Eigen::VectorXd> grid_1d(double a, double b, int count);

}  // namespace mjet
