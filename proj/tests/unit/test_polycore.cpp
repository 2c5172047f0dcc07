#include <Eigen/Core>
#include <cmath>

#include "doctest.h"
#include "mjet/errors.hpp"
#include "mjet/fn_oracle.hpp"
#include "mjet/multi_index.hpp"
#include "mjet/poly.hpp"
#include "mjet/rng.hpp"
#include "mjet/sym_form.hpp"

using namespace mjet;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> vals) {
    Eigen::VectorXd v(static_cast<int>(vals.size()));
    int i = 0;
    for (double x : vals) v[i++] = x;
    return v;
}

Poly random_poly(int n, int d, RngStream& rng) {
    Poly p(n, d);
    for (int i = 0; i < p.coeffs().size(); ++i) p.coeffs()[i] = rng.uniform(-1.0, 1.0);
    return p;
}

}  // namespace

TEST_CASE("graded-lex basis ordering") {
    MonomialBasis b(2, 2);
    REQUIRE(b.size() == 6);
    // 1; X1, X2; X1^2, X1 X2, X2^2
    CHECK(b[0].exponents() == std::vector<int>{0, 0});
    CHECK(b[1].exponents() == std::vector<int>{1, 0});
    CHECK(b[2].exponents() == std::vector<int>{0, 1});
    CHECK(b[3].exponents() == std::vector<int>{2, 0});
    CHECK(b[4].exponents() == std::vector<int>{1, 1});
    CHECK(b[5].exponents() == std::vector<int>{0, 2});
    CHECK(MonomialBasis::dimension(2, 2) == 6);
    CHECK(MonomialBasis::dimension(3, 4) == 35);
}

TEST_CASE("multi-index invariants") {
    CHECK_THROWS_AS(MultiIndex({1, -1}), DimensionError);
    MultiIndex a({2, 1});
    CHECK(a.order() == 3);
    CHECK(a.factorial() == 2.0);
    CHECK(a.multinomial() == 3.0);
}

TEST_CASE("poly evaluation examples") {
    // constant 1 in two variables
    CHECK(Poly::constant(2, 1.0)(vec({5.0, -3.0})) == 1.0);

    // 1 + 2 X1 + 3 X1 X2 at (1,1) -> 6
    Poly p(2, 2);
    p.set_coeff(MultiIndex({0, 0}), 1.0);
    p.set_coeff(MultiIndex({1, 0}), 2.0);
    p.set_coeff(MultiIndex({1, 1}), 3.0);
    CHECK(p(vec({1.0, 1.0})) == doctest::Approx(6.0).epsilon(1e-15));

    // X1^2 X2 at (2,3) -> 12
    CHECK(Poly::monomial(2, MultiIndex({2, 1}))(vec({2.0, 3.0})) ==
          doctest::Approx(12.0).epsilon(1e-15));
}

TEST_CASE("poly derivative examples") {
    Poly p(2, 2);
    p.set_coeff(MultiIndex({0, 0}), 1.0);
    p.set_coeff(MultiIndex({1, 0}), 2.0);
    p.set_coeff(MultiIndex({1, 1}), 3.0);
    // d/dX1 -> 2 + 3 X2
    Poly d = p.derivative(MultiIndex({1, 0}));
    CHECK(d.coeff(MultiIndex({0, 0})) == 2.0);
    CHECK(d.coeff(MultiIndex({0, 1})) == 3.0);
    CHECK(d.actual_degree() == 1);

    // over-differentiation annihilates
    CHECK(Poly::monomial(1, MultiIndex({2})).derivative(MultiIndex({3})).actual_degree() == -1);

    // d^{(1,1)} (X1 X2) = 1
    CHECK(Poly::monomial(2, MultiIndex({1, 1})).derivative(MultiIndex({1, 1})).coeff(
              MultiIndex({0, 0})) == 1.0);
}

TEST_CASE("poly derivative matches central finite differences") {
    RngStream rng(derive_seed(2024, 0));
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 3);
        const int d = 1 + static_cast<int>(rng.next_u64() % 5);
        Poly p = random_poly(n, d, rng);
        // pick a coordinate direction
        const int dir = static_cast<int>(rng.next_u64() % n);
        Eigen::VectorXd x(n);
        for (int i = 0; i < n; ++i) x[i] = rng.uniform(-1.0, 1.0);
        const double h = 1e-5;
        Eigen::VectorXd xp = x, xm = x;
        xp[dir] += h;
        xm[dir] -= h;
        const double fd = (p(xp) - p(xm)) / (2.0 * h);
        const double exact = p.derivative(MultiIndex::unit(n, dir))(x);
        CHECK(fd == doctest::Approx(exact).epsilon(1e-6));
    }
}

TEST_CASE("symform empty and linear cases") {
    // order 0: the empty product is the constant
    SymForm c = SymForm::scalar(2, 7.5);
    CHECK(c.apply({}) == 7.5);
    Poly pc = c.apply_poly({});
    CHECK(pc.coeff(MultiIndex({0, 0})) == 7.5);

    // order 1 form v -> (v1 + v2)/2 applied to X - 0
    SymForm ell(2, 1);
    ell.set_coeff(MultiIndex({1, 0}), 0.5);
    ell.set_coeff(MultiIndex({0, 1}), 0.5);
    Poly q = ell.apply_poly({affine_argument(vec({0.0, 0.0}))});
    CHECK(q.coeff(MultiIndex({1, 0})) == doctest::Approx(0.5));
    CHECK(q.coeff(MultiIndex({0, 1})) == doctest::Approx(0.5));
    CHECK(q.coeff(MultiIndex({0, 0})) == doctest::Approx(0.0));
}

TEST_CASE("symform bilinear example vs polarization oracle") {
    // S symmetric bilinear with S(v, v) = v1 v2: tensor entries c11 = c22 = 0,
    // c12 = 1/2. Applied to (X - (0,0), X - (1,0)) it gives X1 X2 - X2 / 2.
    SymForm s(2, 2);
    s.set_coeff(MultiIndex({1, 1}), 0.5);
    Poly out = s.apply_poly({affine_argument(vec({0.0, 0.0})), affine_argument(vec({1.0, 0.0}))});
    CHECK(out.coeff(MultiIndex({1, 1})) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(out.coeff(MultiIndex({0, 1})) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(out.coeff(MultiIndex({1, 0})) == doctest::Approx(0.0));
    CHECK(out.coeff(MultiIndex({0, 0})) == doctest::Approx(0.0));

    // Polarization identity route on scalar arguments:
    // S(u, w) = (q(u + w) - q(u - w)) / 4, q the diagonal.
    RngStream rng(derive_seed(7, 7));
    for (int t = 0; t < 10; ++t) {
        Eigen::VectorXd u = vec({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
        Eigen::VectorXd w = vec({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
        const double direct = s.apply({u, w});
        const double polar =
            (s.apply_diagonal(u + w) - s.apply_diagonal((u - w).eval())) / 4.0;
        CHECK(direct == doctest::Approx(polar).epsilon(1e-12));
    }
}

TEST_CASE("symform arity and permutation invariance") {
    SymForm s(2, 2);
    s.set_coeff(MultiIndex({1, 1}), 0.5);
    CHECK_THROWS_AS(s.apply({vec({1.0, 0.0})}), DimensionError);

    RngStream rng(derive_seed(3, 5));
    SymForm s3(3, 3);
    for (const auto& a : s3.index_set()) s3.set_coeff(a, rng.uniform(-1.0, 1.0));
    std::vector<Eigen::VectorXd> args{vec({1.0, 2.0, -1.0}), vec({0.5, -0.25, 2.0}),
                                      vec({-1.5, 0.75, 0.1})};
    const double base = s3.apply(args);
    std::swap(args[0], args[2]);
    CHECK(s3.apply(args) == doctest::Approx(base).epsilon(1e-13));
    std::swap(args[0], args[1]);
    CHECK(s3.apply(args) == doctest::Approx(base).epsilon(1e-13));
}

TEST_CASE("apply_poly is permutation invariant coefficient-wise") {
    RngStream rng(derive_seed(3, 11));
    SymForm s(2, 3);
    for (const auto& a : s.index_set()) s.set_coeff(a, rng.uniform(-1.0, 1.0));
    std::vector<std::vector<Poly>> args{affine_argument(vec({0.2, -0.4})),
                                        affine_argument(vec({-0.8, 0.1})),
                                        affine_argument(vec({0.5, 0.9}))};
    Poly base = s.apply_poly(args);
    std::swap(args[0], args[2]);
    Poly swapped = s.apply_poly(args);
    CHECK((base.coeffs() - swapped.coeffs()).cwiseAbs().maxCoeff() < 1e-13);
    std::rotate(args.begin(), args.begin() + 1, args.end());
    Poly rotated = s.apply_poly(args);
    CHECK((base.coeffs() - rotated.coeffs()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("symform diagonal equals multinomial-weighted homogeneous value") {
    RngStream rng(derive_seed(11, 4));
    SymForm s(2, 3);
    for (const auto& a : s.index_set()) s.set_coeff(a, rng.uniform(-1.0, 1.0));
    Eigen::VectorXd v = vec({0.7, -1.3});
    std::vector<Eigen::VectorXd> same{v, v, v};
    CHECK(s.apply(same) == doctest::Approx(s.apply_diagonal(v)).epsilon(1e-12));

    double by_hand = 0.0;
    for (const auto& a : s.index_set()) {
        double m = a.multinomial() * s.coeff(a);
        for (int i = 0; i < 2; ++i)
            for (int e = 0; e < a[i]; ++e) m *= v[i];
        by_hand += m;
    }
    CHECK(s.apply_diagonal(v) == doctest::Approx(by_hand).epsilon(1e-12));
}

TEST_CASE("expansion and polarization agree on poly arguments at k = 5") {
    RngStream rng(derive_seed(21, 1));
    SymForm s(2, 5);
    for (const auto& a : s.index_set()) s.set_coeff(a, rng.uniform(-1.0, 1.0));
    std::vector<std::vector<Poly>> args;
    for (int j = 0; j < 5; ++j)
        args.push_back(affine_argument(vec({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)})));
    // k = 5 takes the polarization path internally; scalar-argument checks
    // pin it against the expansion evaluated at a point.
    Poly via_form = s.apply_poly(args);
    Eigen::VectorXd x = vec({0.3, -0.8});
    std::vector<Eigen::VectorXd> scalar_args;
    for (int j = 0; j < 5; ++j) {
        Eigen::VectorXd a(2);
        for (int i = 0; i < 2; ++i) a[i] = args[j][i](x);
        scalar_args.push_back(a);
    }
    // direct tuple expansion for the oracle
    double oracle = 0.0;
    {
        std::vector<int> tuple(5, 0);
        bool done = false;
        while (!done) {
            std::vector<int> type(2, 0);
            double prod = 1.0;
            for (int j = 0; j < 5; ++j) {
                ++type[tuple[j]];
                prod *= scalar_args[j][tuple[j]];
            }
            oracle += s.coeff(MultiIndex{type}) * prod;
            int j = 4;
            for (; j >= 0; --j) {
                if (++tuple[j] < 2) break;
                tuple[j] = 0;
            }
            done = j < 0;
        }
    }
    CHECK(via_form(x) == doctest::Approx(oracle).epsilon(1e-11));
}

TEST_CASE("taylor polynomial examples") {
    // exp at 0, order 2: 1 + X + X^2/2
    Eigen::VectorXd ones(1);
    ones[0] = 1.0;
    Poly t = taylor_poly(oracles::exp_dot(ones), vec({0.0}), 2);
    CHECK(t.coeff(MultiIndex({0})) == doctest::Approx(1.0));
    CHECK(t.coeff(MultiIndex({1})) == doctest::Approx(1.0));
    CHECK(t.coeff(MultiIndex({2})) == doctest::Approx(0.5));

    // polynomial of degree <= k reproduces itself
    RngStream rng(derive_seed(5, 9));
    Poly p = random_poly(2, 3, rng);
    Poly back = taylor_poly(oracles::from_poly(p), vec({0.4, -0.7}), 3);
    CHECK((back.coeffs() - p.coeffs()).cwiseAbs().maxCoeff() < 1e-12);

    // f(x, y) = x y at (1,1), order 1: 1 + (X1 - 1) + (X2 - 1)
    Poly xy = Poly::monomial(2, MultiIndex({1, 1}));
    Poly t1 = taylor_poly(oracles::from_poly(xy), vec({1.0, 1.0}), 1);
    CHECK(t1.coeff(MultiIndex({0, 0})) == doctest::Approx(-1.0));
    CHECK(t1.coeff(MultiIndex({1, 0})) == doctest::Approx(1.0));
    CHECK(t1.coeff(MultiIndex({0, 1})) == doctest::Approx(1.0));

    // missing jet entries throw
    std::unordered_map<MultiIndex, double, MultiIndexHash> partial;
    partial.emplace(MultiIndex({0}), 1.0);
    CHECK_THROWS_AS(taylor_poly(partial, vec({0.0}), 1), DimensionError);
}
