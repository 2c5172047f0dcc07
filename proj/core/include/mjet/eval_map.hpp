#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "mjet/configuration.hpp"
#include "mjet/subspace.hpp"

namespace mjet {

/// Matrix of the evaluation map on R_degree[X]: row i holds the monomials
/// x_i^alpha for |alpha| <= degree, in graded-lex order.
Eigen::MatrixXd eval_matrix(const Configuration& config, int degree);

/// Kernel of ev_x on R_{p-1}[X] as a Grassmannian point of codimension p.
/// Requires the configuration off-diagonal; throws RankDeficientError with
/// the observed rank when the evaluation matrix is numerically rank
/// deficient (the configuration is too close to the large diagonal).
Subspace ev_kernel(const Configuration& config);

/// Kernels attached to a subset I of the points (the restricted tuple must
/// itself be off-diagonal):
///   first  = ker ev_{x_I} on R_{|I|-1}[X]          (codim |I|),
///   second = ker (ev_{x_I} o K(., x_I)) on R_{p-1}[X] (codim |I|),
/// the composition applied through the exact divided-difference path.
std::pair<Subspace, Subspace> ev_kernel_cluster(const Configuration& config,
                                                const std::vector<int>& cell);

/// Verification report for the transverse-intersection identity: over a
/// partition, the kernels attached to the cells intersect exactly in the
/// full kernel, and their codimensions add up to p.
struct PartitionIntersectionReport {
    std::vector<int> codims;         // codim of each cell kernel, in cell order
    int codim_sum = 0;               // must equal p
    double transversality_gap = 0.0; // largest principal angle(intersection, full kernel)
    int intersection_dim = 0;
};

PartitionIntersectionReport partition_intersection_check(const Configuration& config,
                                                         const Partition& partition);

}  // namespace mjet
