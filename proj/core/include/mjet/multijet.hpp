#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "mjet/configuration.hpp"
#include "mjet/fn_oracle.hpp"
#include "mjet/subspace.hpp"

namespace mjet {

/// One step of a diagonal-limit probe: the kernel along a converging path
/// of configurations, with convergence diagnostics.
struct LimitProbeRow {
    double eps;
    Subspace kernel;
    /// Angle to the expected limit, when one was supplied.
    std::optional<double> angle_to_expected;
    /// Angle to the kernel at the previous (larger) eps; empty on the first row.
    std::optional<double> cauchy_increment;
};

/// Computes ev-kernels along path(eps) for a decreasing list of eps values.
/// Every path(eps) must be off-diagonal; RankDeficientError propagates.
std::vector<LimitProbeRow> limit_probe(
    const std::function<Configuration(double)>& path, const std::vector<double>& epsilons,
    const std::optional<Subspace>& expected = std::nullopt);

/// Site of a 2-point multijet: either two distinct points, or a blow-up
/// point (base point, unit direction) on the exceptional locus.
struct BlowupSite {
    Eigen::VectorXd base;
    Eigen::VectorXd direction;  // unit length
};
using Multijet2Site = std::variant<std::pair<Eigen::VectorXd, Eigen::VectorXd>, BlowupSite>;

/// The 2-point multijet of f in the global trivialization:
///   (f(x1), (f(x2) - f(x1)) / |x2 - x1|)  off the diagonal,
///   (f(x),  D_x f . u)                    at a blow-up point (x, u).
/// Continuous along (x + t u, x) as t -> 0+ for fixed u.
std::pair<double, double> multijet2(const FnOracle& f, const Multijet2Site& site);

/// Off-diagonal p-point multijet in the evaluation trivialization: the
/// vector (f(x_1), ..., f(x_p)), together with its consistency residual
/// against ev_x(K(f, x)) (the two must agree within 1e-8; the residual is
/// returned so callers can assert it).
struct MultijetOffdiag {
    Eigen::VectorXd values;
    double kergin_residual;
};

MultijetOffdiag multijet_offdiag(const FnOracle& f, const Configuration& config);

}  // namespace mjet
