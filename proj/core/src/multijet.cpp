#include "mjet/multijet.hpp"

#include <cmath>

#include "mjet/errors.hpp"
#include "mjet/eval_map.hpp"
#include "mjet/kergin.hpp"

namespace mjet {

std::vector<LimitProbeRow> limit_probe(const std::function<Configuration(double)>& path,
                                       const std::vector<double>& epsilons,
                                       const std::optional<Subspace>& expected) {
    std::vector<LimitProbeRow> rows;
    rows.reserve(epsilons.size());
    for (double eps : epsilons) {
        LimitProbeRow row{eps, ev_kernel(path(eps)), std::nullopt, std::nullopt};
        if (expected) row.angle_to_expected = subspace_angle(row.kernel, *expected);
        if (!rows.empty()) row.cauchy_increment = subspace_angle(row.kernel, rows.back().kernel);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::pair<double, double> multijet2(const FnOracle& f, const Multijet2Site& site) {
    if (f.smoothness < 1) throw DimensionError("multijet2: oracle must be C^1");
    if (std::holds_alternative<BlowupSite>(site)) {
        const auto& blow = std::get<BlowupSite>(site);
        if (std::abs(blow.direction.norm() - 1.0) > 1e-8)
            throw DimensionError("multijet2: blow-up direction must be unit length");
        const double value = f(blow.base);
        double directional = 0.0;
        for (int i = 0; i < f.n; ++i)
            directional += f.d(MultiIndex::unit(f.n, i), blow.base) * blow.direction[i];
        return {value, directional};
    }
    const auto& [x1, x2] = std::get<std::pair<Eigen::VectorXd, Eigen::VectorXd>>(site);
    const double gap = (x2 - x1).norm();
    if (gap == 0.0)
        throw DimensionError("multijet2: coincident points given without direction data");
    const double v1 = f(x1);
    return {v1, (f(x2) - v1) / gap};
}

MultijetOffdiag multijet_offdiag(const FnOracle& f, const Configuration& config) {
    if (!config.off_diagonal())
        throw RankDeficientError("multijet_offdiag: configuration lies on the large diagonal",
                                 config.clustering_partition().cell_count(), config.count());
    const int p = config.count();
    if (f.smoothness < p - 1) throw DimensionError("multijet_offdiag: oracle smoothness below p-1");

    MultijetOffdiag out;
    out.values.resize(p);
    for (int i = 0; i < p; ++i) out.values[i] = f(config.point(i));

    // Quotient-representative consistency: evaluating the Kergin
    // representative reproduces the same coordinates.
    const Poly rep = kergin(f, config.point_list());
    double worst = 0.0;
    for (int i = 0; i < p; ++i) worst = std::max(worst, std::abs(rep(config.point(i)) - out.values[i]));
    out.kergin_residual = worst;
    return out;
}

}  // namespace mjet
