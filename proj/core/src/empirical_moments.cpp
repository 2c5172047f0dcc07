#include "mjet/empirical_moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mjet/rng.hpp"

namespace mjet {

namespace {

int grid_count_for(const CovKernel& kernel, double length, double spacing_corr) {
    const double h = spacing_corr * kernel.correlation_length();
    return std::max(static_cast<int>(std::ceil(length / h)) + 1, 8);
}

std::vector<int> counts_1d(const CovKernel& kernel, const Box& box, std::int64_t trials,
                           std::uint64_t seed, const EmpiricalOptions& opts,
                           std::int64_t* flagged_trials) {
    const int sites = grid_count_for(kernel, box.side(0), opts.grid_spacing_corr);
    std::vector<MultiIndex> derivs{MultiIndex::zero(1), MultiIndex::unit(1, 0)};
    const FieldSampler sampler(kernel, grid_1d(box.lo[0], box.hi[0], sites), derivs, 1);

    std::vector<int> counts(trials);
    auto sums = BlockedAccumulator::sum(
        static_cast<std::size_t>(trials), 1, opts.threads, [&](std::size_t i, double* out) {
            const FieldSample sample = sampler.sample(seed, i);
            const SampledPath1D path = SampledPath1D::from_sample(sample);
            const ZeroSet1D zeros = find_zeros_1d(path, opts.refine_iters);
            counts[i] = static_cast<int>(zeros.zeros.size());
            out[0] = zeros.warnings.empty() ? 0.0 : 1.0;
        });
    if (flagged_trials) *flagged_trials = static_cast<std::int64_t>(sums[0] + 0.5);
    return counts;
}

std::vector<int> counts_2d(const CovKernel& kernel, const Box& box, std::int64_t trials,
                           std::uint64_t seed, const EmpiricalOptions& opts,
                           std::int64_t* flagged_trials) {
    // Planar point counting: two independent components with gradients on a
    // desk-scale grid; 0.1 correlation lengths resolves the sign cells.
    const double spacing = std::max(opts.grid_spacing_corr, 0.1);
    const int nx = grid_count_for(kernel, box.side(0), spacing);
    const int ny = grid_count_for(kernel, box.side(1), spacing);
    std::vector<Eigen::VectorXd> grid;
    grid.reserve(static_cast<std::size_t>(nx) * ny);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            Eigen::VectorXd q(2);
            q[0] = box.lo[0] + box.side(0) * i / (nx - 1);
            q[1] = box.lo[1] + box.side(1) * j / (ny - 1);
            grid.push_back(q);
        }
    std::vector<MultiIndex> derivs{MultiIndex::zero(2), MultiIndex::unit(2, 0),
                                   MultiIndex::unit(2, 1)};
    const FieldSampler sampler(kernel, grid, derivs, 1);

    std::vector<int> counts(trials);
    auto worker = [&](std::size_t i, double* out) {
        // Independent components drawn from disjoint sub-streams.
        std::vector<std::vector<double>> vals(2), gx(2), gy(2);
        for (int c = 0; c < 2; ++c) {
            const Eigen::VectorXd draw = sampler.draw(derive_seed(seed, c + 1), i);
            vals[c].resize(grid.size());
            gx[c].resize(grid.size());
            gy[c].resize(grid.size());
            for (std::size_t s = 0; s < grid.size(); ++s) {
                vals[c][s] = draw[3 * s + 0];
                gx[c][s] = draw[3 * s + 1];
                gy[c][s] = draw[3 * s + 2];
            }
        }
        const Field2D f1 = bilinear_field(box, nx, ny, vals[0], gx[0], gy[0]);
        const Field2D f2 = bilinear_field(box, nx, ny, vals[1], gx[1], gy[1]);
        const ZeroPoints2D z = find_zeros_2d_points(f1, f2, box, std::max(nx, ny) - 1);
        counts[i] = static_cast<int>(z.points.size());
        out[0] = z.warnings.empty() ? 0.0 : 1.0;
    };
    auto sums = BlockedAccumulator::sum(static_cast<std::size_t>(trials), 1, opts.threads, worker);
    if (flagged_trials) *flagged_trials = static_cast<std::int64_t>(sums[0] + 0.5);
    return counts;
}

}  // namespace

namespace {

std::vector<int> zero_counts_impl(const CovKernel& kernel, int components, const Box& box,
                                  std::int64_t trials, std::uint64_t seed,
                                  const EmpiricalOptions& opts, std::int64_t* flagged) {
    if (trials < 1) throw DimensionError("empirical_zero_counts: need trials >= 1");
    if (components != kernel.dim)
        throw DimensionError("empirical_zero_counts: point counting needs r = n");
    if (kernel.dim == 1) return counts_1d(kernel, box, trials, seed, opts, flagged);
    if (kernel.dim == 2) return counts_2d(kernel, box, trials, seed, opts, flagged);
    throw DimensionError("empirical_zero_counts: n in {1, 2} only");
}

}  // namespace

std::vector<int> empirical_zero_counts(const CovKernel& kernel, int components, const Box& box,
                                       std::int64_t trials, std::uint64_t seed,
                                       const EmpiricalOptions& opts) {
    return zero_counts_impl(kernel, components, box, trials, seed, opts, nullptr);
}

MomentReport moments_from_counts(const std::vector<int>& counts, int p_max, std::uint64_t seed,
                                 int bootstrap_resamples) {
    const std::int64_t trials = static_cast<std::int64_t>(counts.size());
    MomentReport report;
    report.p_max = p_max;
    report.trials = trials;
    report.seed = seed;

    auto raw = [&](const std::vector<int>& c, int p) {
        double acc = 0.0;
        for (int v : c) acc += std::pow(static_cast<double>(v), p);
        return acc / c.size();
    };
    auto fact = [&](const std::vector<int>& c, int m) {
        double acc = 0.0;
        for (int v : c) {
            double f = 1.0;
            for (int j = 0; j < m; ++j) f *= v - j;
            acc += f;
        }
        return acc / c.size();
    };

    for (int p = 1; p <= p_max; ++p) {
        report.raw_moments.push_back(raw(counts, p));
        report.factorial_moments.push_back(fact(counts, p));
    }
    report.mean = report.raw_moments[0];
    report.variance = raw(counts, 2) - report.mean * report.mean;

    // Bootstrap over trials; resamples drawn from a dedicated sub-stream so
    // the report is a pure function of (counts, seed).
    std::vector<std::vector<double>> boot_raw(p_max), boot_fact(p_max);
    std::vector<int> resample(counts.size());
    for (int b = 0; b < bootstrap_resamples; ++b) {
        RngStream rng(derive_seed(seed, 0xB007, static_cast<std::uint64_t>(b)));
        for (std::size_t i = 0; i < counts.size(); ++i)
            resample[i] = counts[rng.next_u64() % counts.size()];
        for (int p = 1; p <= p_max; ++p) {
            boot_raw[p - 1].push_back(raw(resample, p));
            boot_fact[p - 1].push_back(fact(resample, p));
        }
    }
    auto sd = [](const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) m += x;
        m /= v.size();
        double s = 0.0;
        for (double x : v) s += (x - m) * (x - m);
        return std::sqrt(s / (v.size() - 1));
    };
    for (int p = 1; p <= p_max; ++p) {
        report.raw_moment_se.push_back(sd(boot_raw[p - 1]));
        report.factorial_moment_se.push_back(sd(boot_fact[p - 1]));
    }
    return report;
}

MomentReport empirical_moments(const CovKernel& kernel, int components, const Box& box, int p_max,
                               std::int64_t trials, std::uint64_t seed,
                               const EmpiricalOptions& opts) {
    if (trials < 1000)
        throw DimensionError("empirical_moments: need at least 10^3 trials for stable bootstrap");
    std::int64_t flagged = 0;
    const std::vector<int> counts =
        zero_counts_impl(kernel, components, box, trials, seed, opts, &flagged);
    MomentReport report = moments_from_counts(counts, p_max, seed, opts.bootstrap_resamples);
    if (flagged > 0)
        report.warnings.push_back(
            {WarningCode::resolution, std::to_string(flagged) + " of " + std::to_string(trials) +
                                          " trials hit the coarse-grid heuristic"});
    return report;
}

CriticalPointsReport critical_points_1d(const CovKernel& kernel, const Box& box,
                                        std::int64_t trials, std::uint64_t seed,
                                        const EmpiricalOptions& opts) {
    if (kernel.dim != 1) throw DimensionError("critical_points_1d: 1-D fields only");
    if (kernel.max_jet < 2)
        throw DimensionError("critical_points_1d: kernel must provide 2 jet orders");

    CriticalPointsReport report;
    // Sample (f, f', f'') so the same draw yields zeros of f and of f'.
    const int sites = grid_count_for(kernel, box.side(0), opts.grid_spacing_corr);
    std::vector<MultiIndex> derivs{MultiIndex::zero(1), MultiIndex{{1}}, MultiIndex{{2}}};
    const FieldSampler sampler(kernel, grid_1d(box.lo[0], box.hi[0], sites), derivs, 1);

    std::vector<int> crit_counts(trials);
    std::vector<std::int64_t> rolle(trials, 0);
    auto worker = [&](std::size_t i, double* out) {
        const Eigen::VectorXd draw = sampler.draw(seed, i);
        std::vector<double> xs(sites), f0(sites), f1(sites), f2(sites);
        for (int s = 0; s < sites; ++s) {
            xs[s] = box.lo[0] + box.side(0) * s / (sites - 1);
            f0[s] = draw[3 * s + 0];
            f1[s] = draw[3 * s + 1];
            f2[s] = draw[3 * s + 2];
        }
        const SampledPath1D fpath(xs, f0, f1);
        const SampledPath1D dpath(xs, f1, f2);
        const ZeroSet1D crits = find_zeros_1d(dpath, opts.refine_iters);
        crit_counts[i] = static_cast<int>(crits.zeros.size());

        // Rolle: between consecutive zeros of f there is a critical point.
        const ZeroSet1D zeros = find_zeros_1d(fpath, opts.refine_iters);
        for (std::size_t z = 0; z + 1 < zeros.zeros.size(); ++z) {
            bool found = false;
            for (double c : crits.zeros)
                if (c > zeros.zeros[z] && c < zeros.zeros[z + 1]) found = true;
            if (!found) ++rolle[i];
        }
        out[0] = 0.0;
    };
    BlockedAccumulator::sum(static_cast<std::size_t>(trials), 1, opts.threads, worker);

    report.counts = moments_from_counts(crit_counts, 1, seed, opts.bootstrap_resamples);
    for (std::int64_t r : rolle) report.rolle_violations += r;

    const CovKernel dkernel = kernels::derivative_field_1d(kernel);
    report.kacrice_density = rho1(dkernel, 1).value;
    report.kacrice_expected = report.kacrice_density * box.side(0);
    report.closed_form_expected =
        std::sqrt(kernel.lambda4() / kernel.lambda2()) / std::numbers::pi * box.side(0);
    return report;
}

BulinskayaReport bulinskaya_diagnostic(const std::vector<ZeroSet1D>& zero_sets, double threshold) {
    BulinskayaReport report;
    report.threshold = threshold;
    std::vector<double> mags;
    for (const auto& zs : zero_sets)
        for (double d : zs.derivatives)
            if (!std::isnan(d)) mags.push_back(std::abs(d));
    report.zero_count = static_cast<std::int64_t>(mags.size());
    if (mags.empty()) return report;
    std::sort(mags.begin(), mags.end());
    report.min_abs_derivative = mags.front();
    report.median_abs_derivative = mags[mags.size() / 2];
    for (double m : mags)
        if (m < threshold) ++report.flagged;
    report.flag_rate = static_cast<double>(report.flagged) / report.zero_count;
    return report;
}

}  // namespace mjet
