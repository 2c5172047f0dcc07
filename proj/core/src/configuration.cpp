#include "mjet/configuration.hpp"

#include <algorithm>
#include <numeric>

#include "mjet/errors.hpp"

namespace mjet {

Partition::Partition(std::vector<std::vector<int>> cells, int p) : p_(p), cells_(std::move(cells)) {
    std::vector<char> seen(p, 0);
    int total = 0;
    for (auto& cell : cells_) {
        if (cell.empty()) throw DimensionError("Partition: empty cell");
        std::sort(cell.begin(), cell.end());
        for (int i : cell) {
            if (i < 0 || i >= p || seen[i]) throw DimensionError("Partition: cells must be disjoint subsets of {0..p-1}");
            seen[i] = 1;
            ++total;
        }
    }
    if (total != p) throw DimensionError("Partition: cells must cover {0..p-1}");
    std::sort(cells_.begin(), cells_.end());
}

Partition Partition::discrete(int p) {
    std::vector<std::vector<int>> cells;
    for (int i = 0; i < p; ++i) cells.push_back({i});
    return Partition(std::move(cells), p);
}

Partition Partition::full(int p) {
    std::vector<int> cell(p);
    std::iota(cell.begin(), cell.end(), 0);
    return Partition({cell}, p);
}

std::vector<Partition> Partition::all(int p) {
    // Restricted growth strings: a[0] = 0, a[i] <= max(a[0..i-1]) + 1.
    std::vector<Partition> out;
    std::vector<int> a(p, 0);
    auto emit = [&]() {
        int m = *std::max_element(a.begin(), a.end());
        std::vector<std::vector<int>> cells(m + 1);
        for (int i = 0; i < p; ++i) cells[a[i]].push_back(i);
        out.emplace_back(std::move(cells), p);
    };
    std::function<void(int, int)> rec = [&](int i, int maxv) {
        if (i == p) {
            emit();
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            a[i] = v;
            rec(i + 1, std::max(maxv, v));
        }
    };
    if (p > 0) rec(1, 0);
    return out;
}

Configuration::Configuration(Eigen::MatrixXd points, double cluster_tol)
    : points_(std::move(points)), cluster_tol_(cluster_tol) {
    if (points_.rows() < 1 || points_.cols() < 1)
        throw DimensionError("Configuration: need at least one point in dimension >= 1");
    if (cluster_tol_ < 0.0) cluster_tol_ = 1e-9 * (diameter() + 1.0);
}

Configuration Configuration::from_points(const std::vector<Eigen::VectorXd>& pts,
                                         double cluster_tol) {
    if (pts.empty()) throw DimensionError("Configuration: empty point list");
    Eigen::MatrixXd m(pts.size(), pts[0].size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].size() != pts[0].size())
            throw DimensionError("Configuration: mixed point dimensions");
        m.row(i) = pts[i];
    }
    return Configuration(std::move(m), cluster_tol);
}

std::vector<Eigen::VectorXd> Configuration::point_list() const {
    std::vector<Eigen::VectorXd> out;
    out.reserve(count());
    for (int i = 0; i < count(); ++i) out.push_back(point(i));
    return out;
}

double Configuration::diameter() const {
    double d = 0.0;
    for (int i = 0; i < count(); ++i)
        for (int j = i + 1; j < count(); ++j)
            d = std::max(d, (points_.row(i) - points_.row(j)).norm());
    return d;
}

Partition Configuration::clustering_partition() const {
    const int p = count();
    std::vector<int> parent(p);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if ((points_.row(i) - points_.row(j)).norm() <= cluster_tol_)
                parent[find(i)] = find(j);
    std::vector<std::vector<int>> groups(p);
    for (int i = 0; i < p; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> cells;
    for (auto& g : groups)
        if (!g.empty()) cells.push_back(std::move(g));
    return Partition(std::move(cells), p);
}

Configuration Configuration::restrict_to(const std::vector<int>& cell) const {
    Eigen::MatrixXd m(cell.size(), dim_space());
    for (std::size_t r = 0; r < cell.size(); ++r) m.row(r) = points_.row(cell[r]);
    return Configuration(std::move(m), cluster_tol_);
}

std::vector<Eigen::VectorXd> Configuration::cluster_representatives() const {
    const Partition partition = clustering_partition();
    std::vector<Eigen::VectorXd> reps;
    for (const auto& cell : partition.cells()) reps.push_back(point(cell.front()));
    return reps;
}

}  // namespace mjet
