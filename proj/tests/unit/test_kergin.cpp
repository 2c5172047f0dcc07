#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "mjet/divided_difference.hpp"
#include "mjet/errors.hpp"
#include "mjet/kergin.hpp"
#include "mjet/rng.hpp"

using namespace mjet;

namespace {

Eigen::VectorXd pt1(double x) {
    Eigen::VectorXd v(1);
    v[0] = x;
    return v;
}

Eigen::VectorXd pt2(double x, double y) {
    Eigen::VectorXd v(2);
    v[0] = x;
    v[1] = y;
    return v;
}

Poly random_poly(int n, int d, RngStream& rng) {
    Poly p(n, d);
    for (int i = 0; i < p.coeffs().size(); ++i) p.coeffs()[i] = rng.uniform(-1.0, 1.0);
    return p;
}

std::vector<Eigen::VectorXd> random_points(int n, int p, RngStream& rng) {
    std::vector<Eigen::VectorXd> pts;
    for (int i = 0; i < p; ++i) {
        Eigen::VectorXd x(n);
        for (int c = 0; c < n; ++c) x[c] = rng.uniform(-1.0, 1.0);
        pts.push_back(x);
    }
    return pts;
}

}  // namespace

TEST_CASE("p = 1 is the constant value") {
    FnOracle f = oracles::exp_dot(pt2(0.3, -0.2));
    Poly k = kergin(f, {pt2(0.5, 0.5)});
    CHECK(k.degree_bound() == 0);
    CHECK(k.coeffs()[0] == doctest::Approx(f(pt2(0.5, 0.5))).epsilon(1e-14));
}

TEST_CASE("Hermite interpolation of x^3 at (0, 0, 1) is X^2") {
    Poly cube = Poly::monomial(1, MultiIndex({3}));
    Poly k = kergin(cube, {pt1(0.0), pt1(0.0), pt1(1.0)});
    CHECK(k.coeff(MultiIndex({0})) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(k.coeff(MultiIndex({1})) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(k.coeff(MultiIndex({2})) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("planar xy through two points") {
    Poly xy = Poly::monomial(2, MultiIndex({1, 1}));
    Poly k = kergin(xy, {pt2(0.0, 0.0), pt2(1.0, 1.0)});
    // (X1 + X2) / 2, and it interpolates at both points
    CHECK(k.coeff(MultiIndex({1, 0})) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(k.coeff(MultiIndex({0, 1})) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(k(pt2(0.0, 0.0)) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(k(pt2(1.0, 1.0)) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("coincident points give the Taylor polynomial") {
    FnOracle f = oracles::sin_dot(pt2(1.2, -0.7), 0.1);
    const auto x0 = pt2(0.3, 0.4);
    Poly k = kergin(f, {x0, x0, x0});
    Poly t = taylor_poly(f, x0, 2);
    CHECK((k.coeffs() - t.coeffs()).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("identity on polynomials of degree p-1") {
    RngStream rng(derive_seed(41, 2));
    for (auto [n, p] : {std::pair{1, 4}, std::pair{2, 3}, std::pair{3, 3}}) {
        Poly q = random_poly(n, p - 1, rng);
        Poly k = kergin(q, random_points(n, p, rng));
        CHECK((k.coeffs() - q.coeffs()).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("interpolation property over all subsets") {
    RngStream rng(derive_seed(43, 8));
    FnOracle f = oracles::combine(
        {0.8, 1.1}, {oracles::sin_dot(pt2(0.9, 1.3), 0.0), oracles::exp_dot(pt2(-0.4, 0.3))});
    const int p = 3;
    auto pts = random_points(2, p, rng);
    Poly k = kergin(f, pts);
    FnOracle k_oracle = oracles::from_poly(k);

    for (unsigned mask = 1; mask < (1u << p); ++mask) {
        std::vector<Eigen::VectorXd> sub;
        for (int i = 0; i < p; ++i)
            if (mask & (1u << i)) sub.push_back(pts[i]);
        SymForm lhs = divided_difference(f, sub);
        SymForm rhs = divided_difference(k_oracle, sub);
        const double scale = std::max(1.0, lhs.coeffs().cwiseAbs().maxCoeff());
        CHECK((lhs.coeffs() - rhs.coeffs()).cwiseAbs().maxCoeff() / scale < 1e-6);
    }
}

TEST_CASE("newton reconstruction round trip") {
    // zero forms give the zero polynomial
    std::vector<SymForm> zeros{SymForm(2, 0), SymForm(2, 1), SymForm(2, 2)};
    Poly z = newton_reconstruct(zeros, {pt2(0.1, 0.2), pt2(-0.3, 0.5)});
    CHECK(z.coeffs().cwiseAbs().maxCoeff() == 0.0);

    // p = 2 in one variable: c + m (X - x1)
    SymForm s0 = SymForm::scalar(1, 2.5);
    SymForm s1(1, 1);
    s1.set_coeff(MultiIndex({1}), -1.5);
    Poly line = newton_reconstruct({s0, s1}, {pt1(0.75)});
    CHECK(line.coeff(MultiIndex({0})) == doctest::Approx(2.5 + 1.5 * 0.75));
    CHECK(line.coeff(MultiIndex({1})) == doctest::Approx(-1.5));

    // reconstruct(divided differences of P) == P
    RngStream rng(derive_seed(47, 0));
    const int n = 2, p = 4;
    Poly q = random_poly(n, p - 1, rng);
    auto pts = random_points(n, p, rng);
    std::vector<SymForm> forms;
    for (int j = 1; j <= p; ++j) {
        std::vector<Eigen::VectorXd> head(pts.begin(), pts.begin() + j);
        forms.push_back(divided_difference(oracles::from_poly(q), head));
    }
    std::vector<Eigen::VectorXd> anchors{pts.begin(), pts.begin() + p - 1};
    Poly back = newton_reconstruct(forms, anchors);
    CHECK((back.coeffs() - q.coeffs()).cwiseAbs().maxCoeff() < 1e-9);

    // order mismatch rejected
    CHECK_THROWS_AS(newton_reconstruct({s1}, {}), DimensionError);
}

TEST_CASE("compatibility map has full rank at clustered configurations") {
    RngStream rng(derive_seed(53, 6));
    for (auto [n, p] : {std::pair{1, 3}, std::pair{2, 4}}) {
        // clustered tuple: first cell has 2 exact repeats, rest distinct
        auto support = random_points(n, p - 1, rng);
        std::vector<Eigen::VectorXd> pts{support[0], support[0]};
        for (int i = 1; i < p - 1; ++i) pts.push_back(support[i]);

        // cells of the clustering partition
        std::vector<std::vector<Eigen::VectorXd>> cells{{pts[0], pts[1]}};
        for (int i = 2; i < p; ++i) cells.push_back({pts[i]});

        const int source_dim = static_cast<int>(MonomialBasis::dimension(n, p - 1));
        int target_dim = 0;
        for (const auto& cell : cells)
            target_dim += static_cast<int>(MonomialBasis::dimension(n, cell.size() - 1));

        Eigen::MatrixXd stacked(target_dim, source_dim);
        int row = 0;
        for (const auto& cell : cells) {
            Eigen::MatrixXd m = kergin_map_matrix(cell, p - 1);
            stacked.middleRows(row, m.rows()) = m;
            row += static_cast<int>(m.rows());
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
        const auto& sv = svd.singularValues();
        const double tol = std::max(stacked.rows(), stacked.cols()) * 1e-12 * sv[0];
        int rank = 0;
        for (int i = 0; i < sv.size(); ++i)
            if (sv[i] > tol) ++rank;
        CHECK(rank == target_dim);
    }
}
