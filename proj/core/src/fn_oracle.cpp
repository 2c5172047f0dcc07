#include "mjet/fn_oracle.hpp"

#include <cmath>
#include <numbers>

#include "mjet/errors.hpp"

namespace mjet {
namespace oracles {

FnOracle from_poly(const Poly& p) {
    FnOracle f;
    f.n = p.dim_space();
    f.poly_degree = std::max(p.actual_degree(), 0);
    f.deriv = [p](const MultiIndex& alpha, const Eigen::VectorXd& x) {
        if (alpha.order() == 0) return p(x);
        return p.derivative(alpha)(x);
    };
    return f;
}

FnOracle exp_dot(const Eigen::VectorXd& a) {
    FnOracle f;
    f.n = static_cast<int>(a.size());
    f.deriv = [a](const MultiIndex& alpha, const Eigen::VectorXd& x) {
        double factor = 1.0;
        for (int i = 0; i < a.size(); ++i)
            for (int e = 0; e < alpha[i]; ++e) factor *= a[i];
        return factor * std::exp(a.dot(x));
    };
    return f;
}

FnOracle sin_dot(const Eigen::VectorXd& xi, double phase) {
    FnOracle f;
    f.n = static_cast<int>(xi.size());
    f.deriv = [xi, phase](const MultiIndex& alpha, const Eigen::VectorXd& x) {
        double factor = 1.0;
        for (int i = 0; i < xi.size(); ++i)
            for (int e = 0; e < alpha[i]; ++e) factor *= xi[i];
        // Each derivative shifts the phase by pi/2.
        return factor * std::sin(xi.dot(x) + phase + alpha.order() * std::numbers::pi / 2.0);
    };
    return f;
}

namespace {

/// Probabilists' Hermite polynomial He_m(t), by recurrence.
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

}  // namespace

FnOracle gaussian(int n) {
    FnOracle f;
    f.n = n;
    // d^m/dt^m e^{-t^2/2} = (-1)^m He_m(t) e^{-t^2/2}, per coordinate.
    f.deriv = [n](const MultiIndex& alpha, const Eigen::VectorXd& x) {
        double v = 1.0;
        for (int i = 0; i < n; ++i) {
            double sign = (alpha[i] % 2 == 0) ? 1.0 : -1.0;
            v *= sign * hermite_he(alpha[i], x[i]) * std::exp(-x[i] * x[i] / 2.0);
        }
        return v;
    };
    return f;
}

FnOracle combine(const std::vector<double>& weights, const std::vector<FnOracle>& fns) {
    if (weights.size() != fns.size() || fns.empty())
        throw DimensionError("oracles::combine: weights and functions must match and be non-empty");
    FnOracle f;
    f.n = fns[0].n;
    f.smoothness = fns[0].smoothness;
    f.poly_degree = fns[0].poly_degree;
    for (const auto& g : fns) {
        if (g.n != f.n) throw DimensionError("oracles::combine: mixed dimensions");
        f.smoothness = std::min(f.smoothness, g.smoothness);
        // A combination stays polynomial only if every term is.
        if (g.poly_degree < 0)
            f.poly_degree = -1;
        else if (f.poly_degree >= 0)
            f.poly_degree = std::max(f.poly_degree, g.poly_degree);
    }
    f.deriv = [weights, fns](const MultiIndex& alpha, const Eigen::VectorXd& x) {
        double acc = 0.0;
        for (std::size_t i = 0; i < fns.size(); ++i) acc += weights[i] * fns[i].deriv(alpha, x);
        return acc;
    };
    return f;
}

}  // namespace oracles

Poly taylor_poly(const std::unordered_map<MultiIndex, double, MultiIndexHash>& jet,
                 const Eigen::VectorXd& x, int k) {
    const int n = static_cast<int>(x.size());
    Poly acc(n, std::max(k, 0));
    const MonomialBasis basis(n, k);
    for (const auto& alpha : basis.indices()) {
        auto it = jet.find(alpha);
        if (it == jet.end())
            throw DimensionError("taylor_poly: missing jet entry of order " +
                                 std::to_string(alpha.order()));
        const double c = it->second / alpha.factorial();
        if (c == 0.0) continue;
        Poly term = Poly::constant(n, c);
        for (int i = 0; i < n; ++i)
            for (int e = 0; e < alpha[i]; ++e) term = term * Poly::shifted_coordinate(n, i, x[i]);
        acc += term.with_degree_bound(k);
    }
    return acc;
}

Poly taylor_poly(const FnOracle& f, const Eigen::VectorXd& x, int k) {
    if (f.smoothness < k) throw DimensionError("taylor_poly: oracle smoothness below requested order");
    std::unordered_map<MultiIndex, double, MultiIndexHash> jet;
    const MonomialBasis basis(f.n, k);
    for (const auto& alpha : basis.indices()) jet.emplace(alpha, f.d(alpha, x));
    return taylor_poly(jet, x, k);
}

}  // namespace mjet
