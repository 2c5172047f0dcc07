#pragma once

#include <Eigen/Core>
#include <vector>

#include "mjet/cov_kernel.hpp"
#include "mjet/multi_index.hpp"

namespace mjet {

/// E[d^alpha f(x) d^beta f(y)] = amplitude * (-1)^{|beta|} d^{alpha+beta} r(x-y)
/// for a common scalar kernel. Requires |alpha| + |beta| <= 2 * max_jet.
double cov_entry(const CovKernel& kernel, const Eigen::VectorXd& x, const MultiIndex& alpha,
                 const Eigen::VectorXd& y, const MultiIndex& beta);

/// Joint covariance of the stacked Gaussian vector
///   (d^alpha f_i(x_j))  for sites j, components i <= r, |alpha| <= order,
/// with site-major, then component, then graded-lex alpha ordering.
/// Components are independent copies of the scalar kernel (identity
/// component covariance).
class JetCov {
public:
    JetCov(const CovKernel& kernel, std::vector<Eigen::VectorXd> sites, int order, int components);

    /// Variant with an explicit derivative list instead of all |alpha| <= order.
    JetCov(const CovKernel& kernel, std::vector<Eigen::VectorXd> sites,
           std::vector<MultiIndex> derivatives, int components);

    const Eigen::MatrixXd& matrix() const { return matrix_; }
    int size() const { return static_cast<int>(matrix_.rows()); }
    int site_count() const { return static_cast<int>(sites_.size()); }
    int component_count() const { return components_; }
    const std::vector<MultiIndex>& derivatives() const { return derivs_; }
    const std::vector<Eigen::VectorXd>& sites() const { return sites_; }

    /// Row of (site, component, derivative slot).
    int row(int site, int component, int deriv_slot) const;

    /// Row indices of the value block (derivative order 0, all sites and
    /// components).
    std::vector<int> value_rows() const;

private:
    void assemble(const CovKernel& kernel);

    std::vector<Eigen::VectorXd> sites_;
    std::vector<MultiIndex> derivs_;
    int components_;
    Eigen::MatrixXd matrix_;
};

/// Smallest eigenvalue of the jet covariance at a single site. The field
/// is certified `order`-non-degenerate when it clears 1e-8, which separates
/// exact null directions (such as the Berry 2-jet) from floating noise at
/// these matrix sizes.
struct NondegeneracyReport {
    double min_eigenvalue;
    bool certified;
    Eigen::VectorXd null_vector;  // eigenvector of the smallest eigenvalue
    std::vector<MultiIndex> derivative_order;
};

NondegeneracyReport nondegeneracy_check(const CovKernel& kernel, int order, int components = 1);

}  // namespace mjet
