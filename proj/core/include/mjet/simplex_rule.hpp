#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "mjet/multi_index.hpp"

namespace mjet {

/// Quadrature rule on the standard k-simplex
///   sigma_k = { t in [0,1]^{k+1} : sum t_i = 1 },
/// normalized against the measure nu_k with total mass nu_k(sigma_k) = 1/k!.
/// Nodes are stored as barycentric (k+1)-tuples.
class SimplexRule {
public:
    /// Grundmann-Moller rule with exactness degree 2s+1 >= min_exactness.
    static SimplexRule grundmann_moeller(int k, int min_exactness);

    int dim() const { return k_; }
    int exactness_degree() const { return exactness_; }
    int size() const { return static_cast<int>(weights_.size()); }
    const std::vector<Eigen::VectorXd>& nodes() const { return nodes_; }  // barycentric
    const std::vector<double>& weights() const { return weights_; }

    /// Integral of fn over sigma_k against nu_k; fn takes a barycentric tuple.
    double integrate(const std::function<double(const Eigen::VectorXd&)>& fn) const;

    /// Closed-form Dirichlet integral of a barycentric monomial:
    ///   int_{sigma_k} t^gamma d nu_k = gamma! / (k + |gamma|)!,
    /// gamma a multi-index over the k+1 barycentric coordinates.
    static double dirichlet_moment(const MultiIndex& gamma);

private:
    SimplexRule(int k, int exactness) : k_(k), exactness_(exactness) {}

    int k_;
    int exactness_;
    std::vector<Eigen::VectorXd> nodes_;
    std::vector<double> weights_;
};

/// Adaptive integration of a smooth function over sigma_k against nu_k,
/// by longest-edge bisection with a Grundmann-Moller error estimate per
/// piece. Tolerance is absolute.
struct AdaptiveSimplexResult {
    double value;
    double error_estimate;
    int pieces;
};

AdaptiveSimplexResult integrate_simplex_adaptive(
    int k, const std::function<double(const Eigen::VectorXd&)>& fn_barycentric,
    double abs_tol = 1e-9, int max_pieces = 20000);

}  // namespace mjet
