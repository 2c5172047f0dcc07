#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "mjet/subspace.hpp"

namespace mjet {

/// Riemannian metric as a field of SPD matrices.
struct MetricField {
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> g;

    /// Evaluates at x, checking symmetry and positive-definiteness.
    Eigen::MatrixXd at(const Eigen::VectorXd& x) const;
};

/// Jac L = det(L L^T)^{1/2} for an r x n matrix with r <= n. Non-negative,
/// positive exactly when L is surjective.
double jacobian(const Eigen::MatrixXd& L);

/// Riemannian density of a metric g (SPD n x n) restricted to a subspace G:
/// det(g|_G)^{1/2} in a Euclidean-orthonormal basis of G.
double gamma_r(const Eigen::MatrixXd& g, const Subspace& G);

/// Jacobian of L with respect to the metric g on the source (Euclidean
/// metric on the target): det(L g^{-1} L^T)^{1/2}.
double jacobian_g(const Eigen::MatrixXd& L, const Eigen::MatrixXd& g);

/// Euclidean-orthonormal basis of ker L.
Subspace kernel_subspace(const Eigen::MatrixXd& L);

}  // namespace mjet
