#include <Eigen/Core>
#include <cmath>

#include "doctest.h"
#include "mjet/divided_difference.hpp"
#include "mjet/errors.hpp"
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

FnOracle monomial_1d(int degree) {
    return oracles::from_poly(Poly::monomial(1, MultiIndex({degree})));
}

}  // namespace

TEST_CASE("order zero is plain evaluation") {
    FnOracle f = oracles::sin_dot(pt1(2.0), 0.3);
    SymForm dd = divided_difference(f, {pt1(0.7)});
    CHECK(dd.order() == 0);
    CHECK(dd.coeffs()[0] == doctest::Approx(std::sin(2.0 * 0.7 + 0.3)).epsilon(1e-14));
}

TEST_CASE("classical 1-D examples") {
    FnOracle sq = monomial_1d(2);
    // f = x^2 at (0, 1): (f(1) - f(0)) / 1 = 1
    SymForm dd = divided_difference(sq, {pt1(0.0), pt1(1.0)});
    CHECK(dd.coeff(MultiIndex({1})) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(divdiff_1d_classical(sq, {0.0, 1.0}) == doctest::Approx(1.0));

    // leading coefficient of x^2 over 3 points
    CHECK(divdiff_1d_classical(sq, {0.0, 1.0, 2.0}) == doctest::Approx(1.0));

    // single point
    CHECK(divdiff_1d_classical(sq, {3.0}) == doctest::Approx(9.0));
}

TEST_CASE("coincident points give the normalized derivative") {
    // f = x^3, points (1,1,1): f[1,1,1] = f''(1)/2! = 3
    FnOracle cube = monomial_1d(3);
    SymForm dd = divided_difference(cube, {pt1(1.0), pt1(1.0), pt1(1.0)});
    CHECK(dd.coeff(MultiIndex({2})) == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(divdiff_1d_classical(cube, {1.0, 1.0, 1.0}) == doctest::Approx(3.0));
}

TEST_CASE("planar example: average gradient of xy over a segment") {
    // f(x, y) = x y, points (0,0) and (1,1): gradient along the segment is
    // (t, t), averaging to the form v -> (v1 + v2)/2.
    FnOracle f = oracles::from_poly(Poly::monomial(2, MultiIndex({1, 1})));
    SymForm dd = divided_difference(f, {pt2(0.0, 0.0), pt2(1.0, 1.0)});
    CHECK(dd.coeff(MultiIndex({1, 0})) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(dd.coeff(MultiIndex({0, 1})) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("linearity and permutation invariance") {
    RngStream rng(derive_seed(17, 0));
    FnOracle f = oracles::sin_dot(pt2(1.0, -2.0), 0.2);
    FnOracle g = oracles::exp_dot(pt2(0.5, 0.25));
    const double a = 0.7, b = -1.3;
    FnOracle combo = oracles::combine({a, b}, {f, g});

    std::vector<Eigen::VectorXd> pts{pt2(0.0, 0.1), pt2(0.5, -0.2), pt2(-0.3, 0.4)};
    SymForm dd_combo = divided_difference(combo, pts);
    SymForm dd_sep = divided_difference(f, pts) * a + divided_difference(g, pts) * b;
    CHECK((dd_combo.coeffs() - dd_sep.coeffs()).cwiseAbs().maxCoeff() < 1e-10);

    std::vector<Eigen::VectorXd> perm{pts[2], pts[0], pts[1]};
    SymForm dd_perm = divided_difference(combo, perm);
    CHECK((dd_combo.coeffs() - dd_perm.coeffs()).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("Hermite-Genocchi agreement on random 1-D cases") {
    RngStream rng(derive_seed(23, 1));
    FnOracle smooth = oracles::combine(
        {1.0, 0.5}, {oracles::sin_dot(pt1(1.7), 0.4), oracles::exp_dot(pt1(-0.6))});
    FnOracle poly = oracles::from_poly([&] {
        Poly p(1, 5);
        for (int i = 0; i < p.coeffs().size(); ++i) p.coeffs()[i] = rng.uniform(-1.0, 1.0);
        return p;
    }());

    for (int trial = 0; trial < 12; ++trial) {
        // support points with min gap, multiplicities <= 3
        std::vector<double> support;
        for (int i = 0; i < 3; ++i) support.push_back(rng.uniform(-1.0, 1.0) + 2.5 * i);
        std::vector<double> pts;
        for (double s : support) {
            const int mult = 1 + static_cast<int>(rng.next_u64() % 3);
            for (int m = 0; m < mult && pts.size() < 5; ++m) pts.push_back(s);
        }
        std::vector<Eigen::VectorXd> epts;
        for (double x : pts) epts.push_back(pt1(x));

        for (const FnOracle* f : {&smooth, &poly}) {
            const double classical = divdiff_1d_classical(*f, pts);
            const SymForm integral = divided_difference(*f, epts);
            const double tol = (f->poly_degree >= 0) ? 1e-10 : 1e-6;
            CHECK(integral.coeffs()[0] ==
                  doctest::Approx(classical).epsilon(tol).scale(std::max(1.0, std::abs(classical))));
        }
    }
}

TEST_CASE("smoothness shortfall and empty input are rejected") {
    FnOracle f = monomial_1d(2);
    f.smoothness = 1;
    CHECK_THROWS_AS(divided_difference(f, {pt1(0.0), pt1(0.5), pt1(1.0)}), DimensionError);
    CHECK_THROWS_AS(divided_difference(f, {}), DimensionError);
}
