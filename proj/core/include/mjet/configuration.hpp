#pragma once

#include <Eigen/Core>
#include <vector>

namespace mjet {

/// Partition of {0..p-1} into disjoint non-empty cells covering it.
class Partition {
public:
    explicit Partition(std::vector<std::vector<int>> cells, int p);

    /// The discrete partition {{0}, ..., {p-1}}.
    static Partition discrete(int p);
    /// The one-cell partition {{0..p-1}}.
    static Partition full(int p);
    /// All partitions of {0..p-1} (Bell(p) of them), by restricted growth.
    static std::vector<Partition> all(int p);

    int ground_size() const { return p_; }
    int cell_count() const { return static_cast<int>(cells_.size()); }
    const std::vector<std::vector<int>>& cells() const { return cells_; }

    bool is_discrete() const { return cell_count() == p_; }

private:
    int p_;
    std::vector<std::vector<int>> cells_;
};

/// Ordered tuple of p points in R^n with a scale-aware clustering
/// tolerance. Indices i and j land in the same cluster when their points
/// are within cluster_tol of each other, closed transitively.
class Configuration {
public:
    /// points: p x n, one point per row. A negative cluster_tol selects the
    /// default 1e-9 * (diameter + 1).
    explicit Configuration(Eigen::MatrixXd points, double cluster_tol = -1.0);

    static Configuration from_points(const std::vector<Eigen::VectorXd>& pts,
                                     double cluster_tol = -1.0);

    int count() const { return static_cast<int>(points_.rows()); }
    int dim_space() const { return static_cast<int>(points_.cols()); }
    const Eigen::MatrixXd& points() const { return points_; }
    Eigen::VectorXd point(int i) const { return points_.row(i); }
    std::vector<Eigen::VectorXd> point_list() const;
    double cluster_tol() const { return cluster_tol_; }
    double diameter() const;

    /// Clustering partition of the indices under the tolerance.
    Partition clustering_partition() const;
    /// True when the clustering partition is discrete.
    bool off_diagonal() const { return clustering_partition().is_discrete(); }

    /// The restricted tuple x_I.
    Configuration restrict_to(const std::vector<int>& cell) const;

    /// One representative point per cluster, in cell order.
    std::vector<Eigen::VectorXd> cluster_representatives() const;

private:
    Eigen::MatrixXd points_;
    double cluster_tol_;
};

}  // namespace mjet
