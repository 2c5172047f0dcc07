#include "mjet/kac_rice.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mjet/conditional_gaussian.hpp"
#include "mjet/jacobian.hpp"
#include "mjet/jet_covariance.hpp"
#include "mjet/rng.hpp"

namespace mjet {

double Box::volume() const {
    double v = 1.0;
    for (int i = 0; i < dim(); ++i) v *= side(i);
    return v;
}

namespace {

/// Unit-amplitude copy: every density in this file works on the
/// correlation, making amplitude invariance exact by construction.
CovKernel correlation_of(const CovKernel& kernel) {
    CovKernel corr = kernel;
    corr.amplitude = 1.0;
    return corr;
}

/// Gradient covariance at a point; the closed form needs it isotropic.
bool gradient_isotropic(const CovKernel& corr, double* lambda2_out) {
    const int n = corr.dim;
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
    Eigen::MatrixXd grad_cov(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            grad_cov(i, j) =
                cov_entry(corr, zero, MultiIndex::unit(n, i), zero, MultiIndex::unit(n, j));
    const double lam = grad_cov(0, 0);
    *lambda2_out = lam;
    return (grad_cov - lam * Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <=
           1e-12 * std::max(lam, 1.0);
}

/// Mean and standard error of fn(i) over `samples` draws, reduced in fixed
/// blocks so the result does not depend on the thread count.
std::pair<double, double> mc_mean(std::int64_t samples, int threads,
                                  const std::function<double(std::int64_t)>& fn) {
    auto sums = BlockedAccumulator::sum(
        static_cast<std::size_t>(samples), 2, threads, [&](std::size_t i, double* out) {
            const double v = fn(static_cast<std::int64_t>(i));
            out[0] = v;
            out[1] = v * v;
        });
    const double mean = sums[0] / samples;
    const double var = std::max(sums[1] / samples - mean * mean, 0.0);
    const double se = std::sqrt(var / samples);
    return {mean, se};
}

/// Shared Monte Carlo engine for rho_p (p >= 1, any component count):
/// condition all first derivatives on vanishing values and average the
/// product of Jacobians.
DensityEstimate rho_p_monte_carlo(const CovKernel& corr, int components,
                                  std::vector<Eigen::VectorXd> sites, const McOptions& mc) {
    const int n = corr.dim;
    const int p = static_cast<int>(sites.size());
    // Canonical site order makes the estimator exactly permutation-symmetric.
    std::sort(sites.begin(), sites.end(), [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
        for (int i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    });

    const JetCov jc(corr, sites, 1, components);
    const CondGaussian cond(jc, jc.value_rows());

    // Conditional rows, per site: components x n derivative entries in
    // graded-lex order (value rows were removed).
    const int per_site = components * n;
    auto estimate = [&](std::int64_t i) {
        const Eigen::VectorXd d = cond.draw(mc.seed, static_cast<std::uint64_t>(i));
        double prod = 1.0;
        Eigen::MatrixXd L(components, n);
        for (int s = 0; s < p; ++s) {
            for (int c = 0; c < components; ++c)
                for (int e = 0; e < n; ++e) L(c, e) = d[s * per_site + c * n + e];
            prod *= jacobian(L);
        }
        return prod;
    };

    auto [mean, se] = mc_mean(mc.samples, mc.threads, estimate);
    DensityEstimate out;
    out.value = mean / cond.value_density_norm();
    out.std_error = se / cond.value_density_norm();
    out.samples = mc.samples;
    out.method = DensityEstimate::Method::monte_carlo;
    return out;
}

}  // namespace

DensityEstimate rho1(const CovKernel& kernel, int components, const McOptions& mc,
                     bool force_monte_carlo) {
    const CovKernel corr = correlation_of(kernel);
    const int n = corr.dim;

    double lambda2 = 0.0;
    if (!force_monte_carlo && components == 1 && gradient_isotropic(corr, &lambda2)) {
        // E|grad f| for grad f ~ N(0, lambda2 I_n) is a chi moment; the
        // value block is independent of the gradient at a point.
        const double cn = std::tgamma((n + 1) / 2.0) /
                          (std::sqrt(std::numbers::pi) * std::tgamma(n / 2.0));
        DensityEstimate out;
        out.value = cn * std::sqrt(lambda2);
        out.method = DensityEstimate::Method::closed_form;
        return out;
    }

    std::vector<Eigen::VectorXd> site{Eigen::VectorXd::Zero(n)};
    return rho_p_monte_carlo(corr, components, std::move(site), mc);
}

DensityEstimate rho_p(const CovKernel& kernel, int components, const Configuration& config,
                      const McOptions& mc) {
    if (config.dim_space() != kernel.dim)
        throw DimensionError("rho_p: configuration dimension does not match kernel");
    return rho_p_monte_carlo(correlation_of(kernel), components, config.point_list(), mc);
}

DensityEstimate rejection_rho2(const CovKernel& kernel, const Eigen::VectorXd& t,
                               const std::vector<double>& deltas, const McOptions& mc) {
    if (deltas.size() < 2)
        throw DimensionError("rejection_rho2: need at least two deltas for extrapolation");
    const CovKernel corr = correlation_of(kernel);
    const int n = corr.dim;
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
    const JetCov jc(corr, {zero, t}, 1, 1);

    // Factor the joint (values, gradients) law once; per-delta estimates
    // reuse the same draws (common random numbers).
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jc.matrix());
    const double min_eig = eig.eigenvalues()[0];
    if (min_eig < -1e-10 * std::max(eig.eigenvalues()[jc.size() - 1], 1.0))
        throw NotPositiveSemiDefiniteError("rejection_rho2: joint covariance indefinite", min_eig);
    const Eigen::MatrixXd transform =
        eig.eigenvectors() * eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();

    const int d = static_cast<int>(deltas.size());
    const int per_site = 1 + n;  // value + gradient, graded-lex
    auto sums = BlockedAccumulator::sum(
        static_cast<std::size_t>(mc.samples), 2 * d, mc.threads, [&](std::size_t i, double* out) {
            RngStream rng(derive_seed(mc.seed, i));
            Eigen::VectorXd z(jc.size());
            rng.fill_normal(z.data(), static_cast<std::size_t>(z.size()));
            const Eigen::VectorXd x = transform * z;
            const double v0 = x[0], v1 = x[per_site];
            double jac = 1.0;
            for (int s = 0; s < 2; ++s) {
                double g2 = 0.0;
                for (int e = 0; e < n; ++e) {
                    const double ge = x[s * per_site + 1 + e];
                    g2 += ge * ge;
                }
                jac *= std::sqrt(g2);
            }
            for (int k = 0; k < d; ++k) {
                const bool accept = std::abs(v0) < deltas[k] && std::abs(v1) < deltas[k];
                const double val = accept ? jac : 0.0;
                out[2 * k] = val;
                out[2 * k + 1] = val * val;
            }
        });

    // Per-delta estimates of rho_2 with standard errors.
    Eigen::VectorXd est(d), var(d);
    for (int k = 0; k < d; ++k) {
        const double norm = std::pow(2.0 * deltas[k], 2);
        const double mean = sums[2 * k] / mc.samples;
        const double second = sums[2 * k + 1] / mc.samples;
        est[k] = mean / norm;
        var[k] = std::max(second - mean * mean, 0.0) / mc.samples / (norm * norm);
    }

    // Weighted fit of est = a + b * delta^2; a is the delta -> 0 limit.
    double s0 = 0, s1 = 0, s2 = 0, sy = 0, sxy = 0;
    for (int k = 0; k < d; ++k) {
        const double w = 1.0 / std::max(var[k], 1e-300);
        const double x = deltas[k] * deltas[k];
        s0 += w;
        s1 += w * x;
        s2 += w * x * x;
        sy += w * est[k];
        sxy += w * x * est[k];
    }
    const double det = s0 * s2 - s1 * s1;
    DensityEstimate out;
    out.value = (s2 * sy - s1 * sxy) / det;
    out.std_error = std::sqrt(std::max(s2 / det, 0.0));
    out.samples = mc.samples;
    out.method = DensityEstimate::Method::monte_carlo;
    return out;
}

ScalingProbeResult diagonal_scaling_probe(const CovKernel& kernel, const Eigen::VectorXd& direction,
                                          const std::vector<double>& eps_grid,
                                          const McOptions& mc) {
    const CovKernel corr = correlation_of(kernel);
    const int n = corr.dim;
    const Eigen::VectorXd u = direction / direction.norm();

    ScalingProbeResult out;
    for (double eps : eps_grid) {
        std::vector<Eigen::VectorXd> sites{Eigen::VectorXd::Zero(n), (eps * u).eval()};
        try {
            DensityEstimate est = rho_p_monte_carlo(corr, 1, sites, mc);
            out.eps.push_back(eps);
            out.rho.push_back(est.value);
            out.se.push_back(est.std_error);
        } catch (const DegenerateConditioningError& e) {
            out.warnings.push_back({WarningCode::integrability,
                                    "conditioning unstable at eps = " + std::to_string(eps) +
                                        ": " + e.what()});
        } catch (const NotPositiveSemiDefiniteError& e) {
            out.warnings.push_back({WarningCode::integrability,
                                    "conditioning unstable at eps = " + std::to_string(eps) +
                                        ": " + e.what()});
        }
    }
    if (out.eps.size() < 2)
        throw DegenerateConditioningError("diagonal_scaling_probe: fewer than two stable points",
                                          0.0);

    // Weighted least squares on log rho vs log eps.
    double s0 = 0, s1 = 0, s2 = 0, sy = 0, sxy = 0;
    for (std::size_t i = 0; i < out.eps.size(); ++i) {
        if (out.rho[i] <= 0.0) continue;
        const double sigma = out.se[i] / out.rho[i];  // delta log rho
        const double w = 1.0 / std::max(sigma * sigma, 1e-12);
        const double x = std::log(out.eps[i]);
        const double y = std::log(out.rho[i]);
        s0 += w;
        s1 += w * x;
        s2 += w * x * x;
        sy += w * y;
        sxy += w * x * y;
    }
    const double det = s0 * s2 - s1 * s1;
    out.slope = (s0 * sxy - s1 * sy) / det;
    out.slope_se = std::sqrt(std::max(s0 / det, 0.0));
    return out;
}

namespace {

struct GaussLegendre {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;  // summing to 2

    /// Newton iteration on Legendre polynomials; plenty for desk-scale n.
    explicit GaussLegendre(int n) {
        nodes.resize(n);
        weights.resize(n);
        for (int i = 0; i < n; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int j = 2; j <= n; ++j) {
                    double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                const double dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

/// Finds the eps below which rho_2 conditioning throws, by halving.
double conditioning_floor(const CovKernel& corr, const Eigen::VectorXd& u, double start) {
    double eps = start;
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(corr.dim);
    while (eps > 1e-9) {
        try {
            std::vector<Eigen::VectorXd> sites{zero, (eps * u).eval()};
            JetCov jc(corr, sites, 1, 1);
            CondGaussian cond(jc, jc.value_rows());
            (void)cond;
        } catch (const DegenerateConditioningError&) {
            return eps;
        } catch (const NotPositiveSemiDefiniteError&) {
            return eps;
        }
        eps *= 0.5;
    }
    return eps;
}

}  // namespace

FactorialIntegralResult factorial_moment_integral(const CovKernel& kernel, int components,
                                                  const Box& box, int k,
                                                  const FactorialIntegralOptions& opts) {
    if (k < 1 || k > 2)
        throw DimensionError("factorial_moment_integral: only k in {1, 2} is supported");
    const CovKernel corr = correlation_of(kernel);
    const int n = corr.dim;
    if (box.dim() != n) throw DimensionError("factorial_moment_integral: box dimension mismatch");
    if (!(components == n || components == 1))
        throw DimensionError("factorial_moment_integral: need r = n (points) or r = 1");

    FactorialIntegralResult out;
    if (k == 1) {
        // Stationarity: rho_1 is constant, the integral is density * volume.
        DensityEstimate d = rho1(corr, components, opts.mc);
        out.value = d.value * box.volume();
        out.mc_error = d.std_error * box.volume();
        out.error = out.mc_error;
        return out;
    }

    if (n > 2)
        throw DimensionError("factorial_moment_integral: k = 2 is implemented for n in {1, 2}");

    const Eigen::VectorXd e1 = Eigen::VectorXd::Unit(n, 0);
    const double floor_eps = conditioning_floor(corr, e1, 1e-2 * corr.correlation_length());
    const double s0 = 10.0 * floor_eps;
    out.collar_width = s0;
    double min_side = box.side(0);
    for (int i = 1; i < n; ++i) min_side = std::min(min_side, box.side(i));
    if (min_side <= 4.0 * s0)
        throw DimensionError(
            "factorial_moment_integral: box side comparable to the conditioning collar; "
            "the k = 2 density cannot be resolved at this scale");

    // Fitted scaling exponent over a stable band above the collar.
    std::vector<double> probe_eps;
    for (double e = std::max(s0 * 2.0, 1e-3); e <= 0.1000001; e *= std::sqrt(10.0))
        probe_eps.push_back(e);
    McOptions probe_mc = opts.mc;
    probe_mc.samples = std::max<std::int64_t>(opts.mc.samples / 4, 20000);
    probe_mc.seed = derive_seed(opts.mc.seed, 0x5C01);
    const ScalingProbeResult probe = diagonal_scaling_probe(corr, e1, probe_eps, probe_mc);
    out.fitted_slope = probe.slope;
    if (probe.slope <= -static_cast<double>(n) + 0.05) {
        out.warnings.push_back({WarningCode::integrability,
                                "fitted diagonal exponent " + std::to_string(probe.slope) +
                                    " is at or below -n; the collar estimate is unreliable"});
    }
    // Model rho_2(0, s) ~ C s^m near the diagonal, anchored at the first
    // stable probe point.
    const double c_model = probe.rho.front() / std::pow(probe.eps.front(), probe.slope);

    auto rho_at = [&](const Eigen::VectorXd& t, std::uint64_t node_id) {
        std::vector<Eigen::VectorXd> sites{Eigen::VectorXd::Zero(n), t};
        McOptions node_mc = opts.mc;
        node_mc.seed = derive_seed(opts.mc.seed, node_id);
        return rho_p_monte_carlo(corr, components, sites, node_mc);
    };

    if (n == 1) {
        // F_2 = 2 int_0^L (L - s) rho_2(0, s) ds for a stationary field.
        // Panels double geometrically out of the collar, then split the
        // tail uniformly.
        const double L = box.side(0);
        std::vector<double> bounds{s0};
        for (double b = 2.0 * s0; b < L / 4.0; b *= 2.0) bounds.push_back(b);
        const double tail_start = bounds.back();
        for (int j = 1; j <= 4; ++j) bounds.push_back(tail_start + (L - tail_start) * j / 4.0);

        const GaussLegendre gl(opts.panel_points);
        const GaussLegendre gl_half(std::max(opts.panel_points / 2, 3));
        double integral = 0.0, integral_half = 0.0, var = 0.0;
        std::uint64_t node_id = 1;
        for (std::size_t piece = 0; piece + 1 < bounds.size(); ++piece) {
            const double a = bounds[piece], b = bounds[piece + 1];
            const double hw = 0.5 * (b - a), mid = 0.5 * (a + b);
            double acc = 0.0, acc_half = 0.0;
            for (int q = 0; q < static_cast<int>(gl.nodes.size()); ++q) {
                const double s = mid + hw * gl.nodes[q];
                Eigen::VectorXd t(1);
                t[0] = s;
                const DensityEstimate d = rho_at(t, node_id++);
                const double w = hw * gl.weights[q] * 2.0 * (L - s);
                acc += w * d.value;
                var += w * w * d.std_error * d.std_error;
            }
            for (int q = 0; q < static_cast<int>(gl_half.nodes.size()); ++q) {
                const double s = mid + hw * gl_half.nodes[q];
                Eigen::VectorXd t(1);
                t[0] = s;
                const DensityEstimate d = rho_at(t, node_id++);
                acc_half += hw * gl_half.weights[q] * 2.0 * (L - s) * d.value;
            }
            integral += acc;
            integral_half += acc_half;
        }
        // Collar: 2 int_0^{s0} (L - s) C s^m ds, evaluated on the model.
        const double m = probe.slope;
        const double collar =
            2.0 * c_model * (L * std::pow(s0, m + 1.0) / (m + 1.0) -
                             std::pow(s0, m + 2.0) / (m + 2.0));
        out.value = integral + collar;
        out.mc_error = std::sqrt(var);
        out.quad_error = std::abs(integral - integral_half);
        out.collar_bound = std::abs(collar);
        out.error = out.mc_error + out.quad_error + out.collar_bound;
        for (const auto& w : probe.warnings) out.warnings.push_back(w);
        return out;
    }

    // n == 2: F_2 = int over the difference box of prod_i (L_i - |t_i|) rho_2(0, t),
    // with the central square handled by the fitted model. Panels touching
    // the origin are split until they clear the collar.
    const double L1 = box.side(0), L2 = box.side(1);
    const GaussLegendre gl(4);
    double integral = 0.0, var = 0.0;
    std::uint64_t node_id = 1;
    struct Panel {
        double x0, x1, y0, y1;
        int depth;
    };
    std::vector<Panel> stack;
    const int base = 6;
    for (int i = 0; i < base; ++i)
        for (int j = 0; j < base; ++j)
            stack.push_back({-L1 + 2.0 * L1 * i / base, -L1 + 2.0 * L1 * (i + 1) / base,
                             -L2 + 2.0 * L2 * j / base, -L2 + 2.0 * L2 * (j + 1) / base, 0});
    auto inside_collar = [&](const Panel& p) {
        return p.x0 >= -s0 && p.x1 <= s0 && p.y0 >= -s0 && p.y1 <= s0;
    };
    auto touches_origin = [&](const Panel& p) {
        return p.x0 <= 0.0 && p.x1 >= 0.0 && p.y0 <= 0.0 && p.y1 >= 0.0;
    };
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        if (inside_collar(p)) continue;
        const double wx = p.x1 - p.x0, wy = p.y1 - p.y0;
        if (touches_origin(p) && (wx > 2.0 * s0 || wy > 2.0 * s0) && p.depth < 14) {
            const double xm = 0.5 * (p.x0 + p.x1), ym = 0.5 * (p.y0 + p.y1);
            stack.push_back({p.x0, xm, p.y0, ym, p.depth + 1});
            stack.push_back({xm, p.x1, p.y0, ym, p.depth + 1});
            stack.push_back({p.x0, xm, ym, p.y1, p.depth + 1});
            stack.push_back({xm, p.x1, ym, p.y1, p.depth + 1});
            continue;
        }
        for (int qi = 0; qi < static_cast<int>(gl.nodes.size()); ++qi) {
            for (int qj = 0; qj < static_cast<int>(gl.nodes.size()); ++qj) {
                Eigen::VectorXd t(2);
                t[0] = 0.5 * (p.x0 + p.x1) + 0.5 * wx * gl.nodes[qi];
                t[1] = 0.5 * (p.y0 + p.y1) + 0.5 * wy * gl.nodes[qj];
                if (t.norm() <= s0) continue;  // clipped corner, negligible area
                const double w = 0.25 * wx * wy * gl.weights[qi] * gl.weights[qj] *
                                 (L1 - std::abs(t[0])) * (L2 - std::abs(t[1]));
                McOptions node_mc = opts.mc;
                node_mc.samples = std::max<std::int64_t>(opts.mc.samples / 4, 10000);
                node_mc.seed = derive_seed(opts.mc.seed, node_id++);
                std::vector<Eigen::VectorXd> sites{Eigen::VectorXd::Zero(2), t};
                const DensityEstimate d = rho_p_monte_carlo(corr, components, sites, node_mc);
                integral += w * d.value;
                var += w * w * d.std_error * d.std_error;
            }
        }
    }
    // Collar on the central square from the model C |t|^m (fine polar sum).
    double collar = 0.0;
    const int nr = 64, na = 64;
    for (int ir = 0; ir < nr; ++ir) {
        const double r0 = s0 * std::sqrt(2.0) * ir / nr;
        const double r1 = s0 * std::sqrt(2.0) * (ir + 1) / nr;
        const double rmid = 0.5 * (r0 + r1);
        for (int ia = 0; ia < na; ++ia) {
            const double th = 2.0 * std::numbers::pi * (ia + 0.5) / na;
            const double tx = rmid * std::cos(th), ty = rmid * std::sin(th);
            if (std::abs(tx) > s0 || std::abs(ty) > s0) continue;
            const double area = rmid * (r1 - r0) * (2.0 * std::numbers::pi / na);
            collar += area * (L1 - std::abs(tx)) * (L2 - std::abs(ty)) * c_model *
                      std::pow(rmid, probe.slope);
        }
    }
    out.value = integral + collar;
    out.mc_error = std::sqrt(var);
    out.collar_bound = std::abs(collar);
    out.quad_error = 0.05 * std::abs(integral);  // 4-point tensor panels, coarse bound
    out.error = out.mc_error + out.quad_error + out.collar_bound;
    for (const auto& w : probe.warnings) out.warnings.push_back(w);
    return out;
}

}  // namespace mjet
