#pragma once

#include <cstdint>
#include <vector>

#include "mjet/cov_kernel.hpp"
#include "mjet/kac_rice.hpp"
#include "mjet/zero_search.hpp"

namespace mjet {

/// Empirical moments of the zero count of a sampled field over a box,
/// with bootstrap standard errors. Identical (seed, config) inputs give
/// identical reports.
struct MomentReport {
    int p_max = 1;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    double mean = 0.0;
    double variance = 0.0;
    std::vector<double> raw_moments;        // E[N^p], p = 1..p_max
    std::vector<double> raw_moment_se;      // bootstrap
    std::vector<double> factorial_moments;  // E[N (N-1) ... (N-m+1)], m = 1..p_max
    std::vector<double> factorial_moment_se;
    std::vector<Warning> warnings;
};

struct EmpiricalOptions {
    /// Grid spacing in units of the kernel's correlation length.
    double grid_spacing_corr = 0.02;
    int refine_iters = 80;
    int threads = 1;
    int bootstrap_resamples = 1000;
};

/// Point-counting case n = r: counts zeros of the sampled field per trial
/// (n = 1 via sign changes on the Hermite path, n = 2 via the planar
/// Newton search on a pair of independent components).
MomentReport empirical_moments(const CovKernel& kernel, int components, const Box& box, int p_max,
                               std::int64_t trials, std::uint64_t seed,
                               const EmpiricalOptions& opts = {});

/// Zero counts per trial, the raw material of empirical_moments; exposed
/// for consistency checks that need the per-trial data.
std::vector<int> empirical_zero_counts(const CovKernel& kernel, int components, const Box& box,
                                       std::int64_t trials, std::uint64_t seed,
                                       const EmpiricalOptions& opts = {});

MomentReport moments_from_counts(const std::vector<int>& counts, int p_max, std::uint64_t seed,
                                 int bootstrap_resamples = 1000);

/// Critical points of a 1-D field: zeros of f', counted empirically and
/// compared with the Kac-Rice value computed on the derivative field
/// (covariance -r''), whose closed form is sqrt(lambda4/lambda2)/pi per
/// unit length.
struct CriticalPointsReport {
    MomentReport counts;
    double kacrice_density = 0.0;   // rho_1 of the derivative field
    double kacrice_expected = 0.0;  // density * box length
    double closed_form_expected = 0.0;
    /// Pairs of consecutive zeros of f with no critical point between
    /// them, across all trials (Rolle check; must be zero).
    std::int64_t rolle_violations = 0;
};

CriticalPointsReport critical_points_1d(const CovKernel& kernel, const Box& box,
                                        std::int64_t trials, std::uint64_t seed,
                                        const EmpiricalOptions& opts = {});

/// Distribution of |f'| at refined zeros: near-degenerate zeros (below the
/// threshold) are flagged; for a 1-non-degenerate field the flag rate is an
/// empirical stand-in for the almost-sure absence of singular zeros.
struct BulinskayaReport {
    std::int64_t zero_count = 0;
    std::int64_t flagged = 0;
    double flag_rate = 0.0;
    double threshold = 1e-6;
    double min_abs_derivative = 0.0;
    double median_abs_derivative = 0.0;
};

BulinskayaReport bulinskaya_diagnostic(const std::vector<ZeroSet1D>& zero_sets,
                                       double threshold = 1e-6);

}  // namespace mjet
