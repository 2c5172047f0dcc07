#include "mjet/divided_difference.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mjet/errors.hpp"
#include "mjet/simplex_rule.hpp"

namespace mjet {

SymForm divided_difference(const FnOracle& f, const std::vector<Eigen::VectorXd>& points,
                           const DividedDiffOptions& opts) {
    if (points.empty()) throw DimensionError("divided_difference: empty point list");
    const int k = static_cast<int>(points.size()) - 1;
    const int n = f.n;
    for (const auto& x : points)
        if (x.size() != n) throw DimensionError("divided_difference: point dimension mismatch");
    if (f.smoothness < k)
        throw DimensionError("divided_difference: oracle smoothness " +
                             std::to_string(f.smoothness) + " below order " + std::to_string(k));

    SymForm form(n, k);
    if (k == 0) {
        form.coeffs()[0] = f(points[0]);
        return form;
    }

    // The barycentric-to-point buffer is reused across quadrature nodes;
    // the integration below is single-threaded per call.
    Eigen::VectorXd x_buffer(n);
    auto along = [&, x_buffer](const MultiIndex& alpha, const Eigen::VectorXd& bary) mutable {
        x_buffer.setZero();
        for (int i = 0; i <= k; ++i) x_buffer += bary[i] * points[i];
        return f.d(alpha, x_buffer);
    };

    const auto& alphas = form.index_set();
    if (f.poly_degree >= 0) {
        // d^alpha f composed with the affine map has degree <= poly_degree - k
        // in t, so a rule of that exactness integrates it exactly.
        const SimplexRule rule =
            SimplexRule::grundmann_moeller(k, std::max(f.poly_degree - k, 0));
        for (int c = 0; c < form.size(); ++c) {
            const MultiIndex& alpha = alphas[c];
            form.coeffs()[c] = rule.integrate(
                [&](const Eigen::VectorXd& bary) { return along(alpha, bary); });
        }
    } else {
        for (int c = 0; c < form.size(); ++c) {
            const MultiIndex& alpha = alphas[c];
            auto res = integrate_simplex_adaptive(
                k, [&](const Eigen::VectorXd& bary) { return along(alpha, bary); }, opts.abs_tol,
                opts.max_pieces);
            form.coeffs()[c] = res.value;
        }
    }
    return form;
}

double divdiff_1d_classical(const FnOracle& f, std::vector<double> points) {
    if (f.n != 1) throw DimensionError("divdiff_1d_classical: oracle must be one-dimensional");
    if (points.empty()) throw DimensionError("divdiff_1d_classical: empty point list");
    std::sort(points.begin(), points.end());
    const int m = static_cast<int>(points.size());

    // Multiplicity of each node determines the derivative data needed.
    int max_mult = 1, run = 1;
    for (int i = 1; i < m; ++i) {
        run = (points[i] == points[i - 1]) ? run + 1 : 1;
        max_mult = std::max(max_mult, run);
    }
    if (f.smoothness < max_mult - 1)
        throw DimensionError("divdiff_1d_classical: missing derivative data at repeated points");

    auto deriv1d = [&](int order, double x) {
        Eigen::VectorXd p(1);
        p[0] = x;
        return f.d(MultiIndex{{order}}, p);
    };

    // Confluent Newton table, one diagonal at a time.
    std::vector<double> col(m);
    for (int i = 0; i < m; ++i) col[i] = deriv1d(0, points[i]);
    double fact = 1.0;
    for (int j = 1; j < m; ++j) {
        fact *= j;
        for (int i = 0; i + j < m; ++i) {
            const double lo = points[i], hi = points[i + j];
            if (hi == lo)
                col[i] = deriv1d(j, lo) / fact;
            else
                col[i] = (col[i + 1] - col[i]) / (hi - lo);
        }
        col.resize(m - j);
    }
    return col[0];
}

}  // namespace mjet
