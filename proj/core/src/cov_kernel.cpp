#include "mjet/cov_kernel.hpp"

#include <cmath>
#include <numbers>

#include "mjet/errors.hpp"

namespace mjet {

double CovKernel::lambda2() const {
    Eigen::VectorXd zero = Eigen::VectorXd::Zero(dim);
    MultiIndex d2 = MultiIndex::unit(dim, 0) + MultiIndex::unit(dim, 0);
    return -r_deriv(d2, zero);
}

double CovKernel::lambda4() const {
    Eigen::VectorXd zero = Eigen::VectorXd::Zero(dim);
    std::vector<int> e(dim, 0);
    e[0] = 4;
    return r_deriv(MultiIndex{e}, zero);
}

double CovKernel::correlation_length() const { return 1.0 / std::sqrt(lambda2()); }

namespace kernels {

namespace {

double hermite_he(int m, double t) {
    double h0 = 1.0, h1 = t;
    if (m == 0) return h0;
    if (m == 1) return h1;
    for (int j = 2; j <= m; ++j) {
        double h2 = t * h1 - (j - 1) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

/// d^gamma of J_0(|t|) in two variables, summed term by term from
///   J_0(|t|) = sum_m (-1/4)^m / (m!)^2 (t_1^2 + t_2^2)^m.
/// Each binomial monomial t_1^{2j} t_2^{2(m-j)} is differentiated exactly.
/// Terms beyond m ~ e|t| decay factorially; the loop stops once two
/// consecutive m-contributions fall below 1e-17 of the accumulated value,
/// which bounds the alternating remainder at the same level.
double bessel_j0_radial_deriv(const MultiIndex& gamma, const Eigen::VectorXd& t) {
    const int g1 = gamma[0], g2 = gamma[1];
    const double t1 = t[0], t2 = t[1];

    auto falling = [](int e, int c) {
        if (c > e) return 0.0;
        double f = 1.0;
        for (int j = e; j > e - c; --j) f *= j;
        return f;
    };
    auto ipow = [](double x, int e) {
        double v = 1.0;
        for (int j = 0; j < e; ++j) v *= x;
        return v;
    };

    double acc = 0.0;
    double am = 1.0;  // (-1/4)^m / (m!)^2
    // The first term that can contribute: every monomial t1^{2j} t2^{2(m-j)}
    // needs 2j >= g1 and 2(m-j) >= g2.
    const int m_min = (g1 + 1) / 2 + (g2 + 1) / 2;
    int quiet = 0;
    for (int m = 0; m <= 160; ++m) {
        if (m > 0) am *= -0.25 / (static_cast<double>(m) * m);
        double term = 0.0;
        double binom = 1.0;  // C(m, j)
        for (int j = 0; j <= m; ++j) {
            if (j > 0) binom = binom * (m - j + 1) / j;
            const int e1 = 2 * j, e2 = 2 * (m - j);
            if (e1 >= g1 && e2 >= g2) {
                term += binom * falling(e1, g1) * ipow(t1, e1 - g1) * falling(e2, g2) *
                        ipow(t2, e2 - g2);
            }
        }
        term *= am;
        acc += term;
        if (m >= m_min && std::abs(term) < 1e-17 * (1.0 + std::abs(acc))) {
            if (++quiet >= 2) break;
        } else if (std::abs(term) >= 1e-17 * (1.0 + std::abs(acc))) {
            quiet = 0;
        }
    }
    return acc;
}

}  // namespace

CovKernel bargmann_fock(int n, int max_jet) {
    CovKernel k;
    k.name = "bargmann_fock";
    k.dim = n;
    k.max_jet = max_jet;
    k.r = [](const Eigen::VectorXd& t) { return std::exp(-t.squaredNorm() / 2.0); };
    // Factorizes over coordinates; d^m/dt^m e^{-t^2/2} = (-1)^m He_m(t) e^{-t^2/2}.
    k.r_deriv = [n](const MultiIndex& gamma, const Eigen::VectorXd& t) {
        double v = 1.0;
        for (int i = 0; i < n; ++i) {
            const double sign = (gamma[i] % 2 == 0) ? 1.0 : -1.0;
            v *= sign * hermite_he(gamma[i], t[i]) * std::exp(-t[i] * t[i] / 2.0);
        }
        return v;
    };
    return k;
}

CovKernel berry(int n, int max_jet) {
    if (n == 1) {
        CovKernel k;
        k.name = "berry";
        k.dim = 1;
        k.max_jet = max_jet;
        k.r = [](const Eigen::VectorXd& t) { return std::cos(t[0]); };
        k.r_deriv = [](const MultiIndex& gamma, const Eigen::VectorXd& t) {
            return std::cos(t[0] + gamma.order() * std::numbers::pi / 2.0);
        };
        return k;
    }
    if (n == 2) {
        CovKernel k;
        k.name = "berry";
        k.dim = 2;
        k.max_jet = max_jet;
        k.r = [](const Eigen::VectorXd& t) {
            return bessel_j0_radial_deriv(MultiIndex::zero(2), t);
        };
        k.r_deriv = [](const MultiIndex& gamma, const Eigen::VectorXd& t) {
            return bessel_j0_radial_deriv(gamma, t);
        };
        return k;
    }
    throw DimensionError("kernels::berry: only n in {1, 2} is shipped");
}

CovKernel finite_atom(const std::vector<double>& weights,
                      const std::vector<Eigen::VectorXd>& frequencies, int max_jet) {
    if (weights.empty() || weights.size() != frequencies.size())
        throw DimensionError("kernels::finite_atom: weights and frequencies must match");
    const int n = static_cast<int>(frequencies[0].size());
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw DimensionError("kernels::finite_atom: weights must be >= 0");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw DimensionError("kernels::finite_atom: weights must sum to 1 (unit variance)");

    CovKernel k;
    k.name = "finite_atom";
    k.dim = n;
    k.max_jet = max_jet;
    auto eval = [weights, frequencies](const MultiIndex& gamma, const Eigen::VectorXd& t) {
        // d^gamma cos(xi . t) = xi^gamma cos(xi . t + |gamma| pi/2)
        double acc = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            double factor = weights[i];
            for (int c = 0; c < frequencies[i].size(); ++c)
                for (int e = 0; e < gamma[c]; ++e) factor *= frequencies[i][c];
            acc += factor *
                   std::cos(frequencies[i].dot(t) + gamma.order() * std::numbers::pi / 2.0);
        }
        return acc;
    };
    k.r = [eval, n](const Eigen::VectorXd& t) { return eval(MultiIndex::zero(n), t); };
    k.r_deriv = eval;
    return k;
}

CovKernel scaled(const CovKernel& base, double c2) {
    if (c2 <= 0.0) throw DimensionError("kernels::scaled: scale must be positive");
    CovKernel k = base;
    k.amplitude = base.amplitude * c2;
    k.params["scale2"] = c2;
    return k;
}

CovKernel derivative_field_1d(const CovKernel& base) {
    if (base.dim != 1) throw DimensionError("kernels::derivative_field_1d: base must be 1-D");
    if (base.max_jet < 1)
        throw DimensionError("kernels::derivative_field_1d: base max_jet must be >= 1");
    const double lam2 = base.lambda2();
    CovKernel k;
    k.name = base.name + "_derivative";
    k.dim = 1;
    k.max_jet = base.max_jet - 1;
    k.amplitude = base.amplitude * lam2;
    auto base_deriv = base.r_deriv;
    k.r_deriv = [base_deriv, lam2](const MultiIndex& gamma, const Eigen::VectorXd& t) {
        return -base_deriv(MultiIndex{{gamma[0] + 2}}, t) / lam2;
    };
    k.r = [k_deriv = k.r_deriv](const Eigen::VectorXd& t) {
        return k_deriv(MultiIndex::zero(1), t);
    };
    return k;
}

}  // namespace kernels

CovKernel make_kernel(const KernelSpec& spec) {
    CovKernel k;
    if (spec.name == "bargmann_fock")
        k = kernels::bargmann_fock(spec.dim, spec.max_jet);
    else if (spec.name == "berry")
        k = kernels::berry(spec.dim, spec.max_jet);
    else if (spec.name == "finite_atom")
        k = kernels::finite_atom(spec.weights, spec.frequencies, spec.max_jet);
    else
        throw DimensionError("make_kernel: unknown kernel '" + spec.name + "'");
    if (spec.amplitude != 1.0) k = kernels::scaled(k, spec.amplitude);
    return k;
}

}  // namespace mjet
