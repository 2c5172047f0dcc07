#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <vector>

#include "mjet/configuration.hpp"
#include "mjet/cov_kernel.hpp"
#include "mjet/errors.hpp"

namespace mjet {

struct DensityEstimate {
    enum class Method { closed_form, monte_carlo };

    double value = 0.0;
    double std_error = 0.0;  // zero exactly when method == closed_form
    std::int64_t samples = 0;
    Method method = Method::closed_form;
};

struct McOptions {
    std::int64_t samples = 100000;
    std::uint64_t seed = 0;
    int threads = 1;
};

/// Axis-aligned box.
struct Box {
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;

    int dim() const { return static_cast<int>(lo.size()); }
    double volume() const;
    double side(int i) const { return hi[i] - lo[i]; }
};

/// First Kac-Rice density of a stationary field at any point:
///   rho_1 = E[ Jac(D_x f) | f(x) = 0 ] / det(2 pi Var f(x))^{1/2}.
/// Closed form for hypersurfaces (r = 1) with isotropic gradient
/// covariance: rho_1 = Gamma((n+1)/2) / (sqrt(pi) Gamma(n/2)) * sqrt(lambda_2),
/// which is sqrt(lambda_2)/pi in dimension one (stationarity makes f(x)
/// and the gradient independent, so conditioning drops out). Monte Carlo
/// with a reported standard error otherwise. Works on the correlation, so
/// the estimate is exactly invariant under amplitude scaling.
DensityEstimate rho1(const CovKernel& kernel, int components, const McOptions& mc = {},
                     bool force_monte_carlo = false);

/// p-point Kac-Rice density at an off-diagonal configuration:
///   rho_p = E[ prod_i Jac(D_{x_i} f) | f(x_i) = 0 for all i ]
///           / det(2 pi Var(f(x_1), ..., f(x_p)))^{1/2}.
/// Monte Carlo over the conditional Gaussian of all first derivatives.
/// Sites are sorted lexicographically before assembly, so the estimate is
/// exactly symmetric under permutations of the configuration. Throws
/// DegenerateConditioningError near the large diagonal, where the density
/// genuinely degenerates.
DensityEstimate rho_p(const CovKernel& kernel, int components, const Configuration& config,
                      const McOptions& mc = {});

/// Rejection-sampling cross-check of rho_2(0, t) for hypersurfaces:
/// E[prod Jac * 1{|values| < delta}] / (2 delta)^2, Richardson-extrapolated
/// over the given deltas (error term O(delta^2)). Verification oracle for
/// the conditional-Gaussian route; much less efficient by construction.
DensityEstimate rejection_rho2(const CovKernel& kernel, const Eigen::VectorXd& t,
                               const std::vector<double>& deltas, const McOptions& mc);

/// Log-log slope of eps -> rho_2(0, eps * u). For a stationary field the
/// density vanishes like eps in dimension one and blows up like 1/eps in
/// higher dimension; the fitted exponent is the empirical check of that
/// diagonal behavior.
struct ScalingProbeResult {
    std::vector<double> eps;
    std::vector<double> rho;
    std::vector<double> se;
    double slope = 0.0;
    double slope_se = 0.0;
    std::vector<Warning> warnings;
};

ScalingProbeResult diagonal_scaling_probe(const CovKernel& kernel, const Eigen::VectorXd& direction,
                                          const std::vector<double>& eps_grid,
                                          const McOptions& mc = {});

/// k-th factorial moment integral of the zero measure over box^k:
/// tensor quadrature of rho_k away from the diagonal plus a collar
/// estimate whose width is 10x the eps floor where conditioning destabilizes
/// and whose value comes from the fitted scaling exponent.
struct FactorialIntegralResult {
    double value = 0.0;
    double error = 0.0;  // total budget: mc + quadrature + collar
    double mc_error = 0.0;
    double quad_error = 0.0;
    double collar_bound = 0.0;
    double collar_width = 0.0;
    double fitted_slope = 0.0;
    std::vector<Warning> warnings;
};

struct FactorialIntegralOptions {
    McOptions mc{};
    int panel_points = 12;  // Gauss-Legendre points per panel (1-D case)
};

FactorialIntegralResult factorial_moment_integral(const CovKernel& kernel, int components,
                                                  const Box& box, int k,
                                                  const FactorialIntegralOptions& opts = {});

}  // namespace mjet
