#pragma once

#include <Eigen/Core>
#include <functional>
#include <map>
#include <string>

#include "mjet/multi_index.hpp"

namespace mjet {

/// Stationary covariance kernel of a Gaussian field on R^n, split into a
/// unit-variance correlation function r (r(0) = 1) and an explicit
/// amplitude (the field variance). Kac-Rice densities consume only the
/// correlation, which makes their scale invariance exact: the zero set of
/// c f is the zero set of f.
struct CovKernel {
    std::string name;
    int dim = 1;
    /// Highest jet order q for which cov entries with |alpha|+|beta| <= 2q
    /// are available.
    int max_jet = 0;
    double amplitude = 1.0;
    std::map<std::string, double> params;

    /// Correlation value r(t), r(0) = 1.
    std::function<double(const Eigen::VectorXd&)> r;
    /// d^gamma r(t) for |gamma| <= 2 * max_jet.
    std::function<double(const MultiIndex&, const Eigen::VectorXd&)> r_deriv;

    /// Second spectral moment -d^2 r / dt_1^2 (0) of the correlation.
    double lambda2() const;
    /// Fourth spectral moment d^4 r / dt_1^4 (0).
    double lambda4() const;
    /// 1 / sqrt(lambda2): the natural grid scale.
    double correlation_length() const;
};

namespace kernels {

/// Bargmann-Fock field: r(t) = exp(-|t|^2 / 2), any dimension,
/// non-degenerate at every jet order.
CovKernel bargmann_fock(int n, int max_jet = 6);

/// Berry field: spectral measure uniform on S^{n-1}. n = 1 gives
/// r(t) = cos t; n = 2 gives r(t) = J_0(|t|) through its power series.
/// 1-non-degenerate but not 2-non-degenerate (it solves Laplace f + f = 0).
CovKernel berry(int n, int max_jet = 4);

/// Finite-atom spectral kernel r(t) = sum_i w_i cos(xi_i . t) with
/// sum w_i = 1, for building degenerate and non-degenerate test cases.
CovKernel finite_atom(const std::vector<double>& weights,
                      const std::vector<Eigen::VectorXd>& frequencies, int max_jet = 6);

/// Same correlation with the amplitude multiplied by c2.
CovKernel scaled(const CovKernel& base, double c2);

/// 1-D derivative field: if f has correlation r, f' has covariance -r''.
/// Returned with unit variance (amplitude carries -r''(0)) and one jet
/// order less than the base.
CovKernel derivative_field_1d(const CovKernel& base);

}  // namespace kernels

/// Structured kernel description used by the CLI and file formats.
struct KernelSpec {
    std::string name;  // "bargmann_fock" | "berry" | "finite_atom"
    int dim = 1;
    int max_jet = 6;
    double amplitude = 1.0;
    std::vector<double> weights;                // finite_atom only
    std::vector<Eigen::VectorXd> frequencies;   // finite_atom only
};

CovKernel make_kernel(const KernelSpec& spec);

}  // namespace mjet
