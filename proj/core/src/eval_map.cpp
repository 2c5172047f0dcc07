#include "mjet/eval_map.hpp"

#include <Eigen/Dense>
#include <string>

#include "mjet/errors.hpp"
#include "mjet/kergin.hpp"
#include "mjet/multi_index.hpp"

namespace mjet {

Eigen::MatrixXd eval_matrix(const Configuration& config, int degree) {
    const int n = config.dim_space();
    const MonomialBasis basis(n, degree);
    Eigen::MatrixXd m(config.count(), basis.size());
    for (int i = 0; i < config.count(); ++i) {
        const Eigen::VectorXd x = config.point(i);
        Eigen::MatrixXd pow(n, degree + 1);
        for (int c = 0; c < n; ++c) {
            pow(c, 0) = 1.0;
            for (int e = 1; e <= degree; ++e) pow(c, e) = pow(c, e - 1) * x[c];
        }
        for (int t = 0; t < basis.size(); ++t) {
            double v = 1.0;
            for (int c = 0; c < n; ++c) v *= pow(c, basis[t][c]);
            m(i, t) = v;
        }
    }
    return m;
}

namespace {

/// Kernel of a wide matrix by SVD with the rank tolerance
/// N * eps * sigma_max. Throws when the numerical rank falls short of the
/// row count: returning a wrong-codimension subspace would silently absorb
/// exactly the degeneration along the diagonal that the tests probe.
Subspace kernel_of(const Eigen::MatrixXd& m, const char* what) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double tol = std::max(rows, cols) * 2.2e-16 * (sv.size() > 0 ? sv[0] : 0.0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > tol) ++rank;
    if (rank < rows)
        throw RankDeficientError(std::string(what) + ": evaluation matrix has numerical rank " +
                                     std::to_string(rank) + " < " + std::to_string(rows),
                                 rank, rows);
    return Subspace(svd.matrixV().rightCols(cols - rank));
}

}  // namespace

Subspace ev_kernel(const Configuration& config) {
    if (!config.off_diagonal())
        throw RankDeficientError("ev_kernel: configuration lies on the large diagonal",
                                 static_cast<int>(config.clustering_partition().cell_count()),
                                 config.count());
    return kernel_of(eval_matrix(config, config.count() - 1), "ev_kernel");
}

std::pair<Subspace, Subspace> ev_kernel_cluster(const Configuration& config,
                                                const std::vector<int>& cell) {
    if (cell.empty()) throw DimensionError("ev_kernel_cluster: empty subset");
    const Configuration restricted = config.restrict_to(cell);
    if (!restricted.off_diagonal())
        throw RankDeficientError("ev_kernel_cluster: restricted tuple lies on the large diagonal",
                                 restricted.clustering_partition().cell_count(),
                                 restricted.count());

    Subspace small = kernel_of(eval_matrix(restricted, restricted.count() - 1),
                               "ev_kernel_cluster (G_I)");

    // ev_{x_I} o K(., x_I) on R_{p-1}[X]: rows are evaluations at the
    // restricted points of the Kergin projections of the basis monomials.
    const Eigen::MatrixXd kmat = kergin_map_matrix(restricted.point_list(), config.count() - 1);
    const Eigen::MatrixXd ev_small = eval_matrix(restricted, restricted.count() - 1);
    Subspace lifted = kernel_of(ev_small * kmat, "ev_kernel_cluster (G~_I)");
    return {std::move(small), std::move(lifted)};
}

PartitionIntersectionReport partition_intersection_check(const Configuration& config,
                                                         const Partition& partition) {
    if (partition.ground_size() != config.count())
        throw DimensionError("partition_intersection_check: partition size mismatch");
    PartitionIntersectionReport report;
    std::vector<Subspace> lifted;
    for (const auto& cell : partition.cells()) {
        auto [small, big] = ev_kernel_cluster(config, cell);
        (void)small;
        report.codims.push_back(big.codim());
        report.codim_sum += big.codim();
        lifted.push_back(std::move(big));
    }
    const Subspace inter = subspace_intersection(lifted);
    const Subspace full = ev_kernel(config);
    report.intersection_dim = inter.dim();
    report.transversality_gap = subspace_angle(inter, full);
    return report;
}

}  // namespace mjet
