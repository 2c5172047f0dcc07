#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "mjet/errors.hpp"
#include "mjet/field_sampler.hpp"
#include "mjet/jet_covariance.hpp"
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

}  // namespace

TEST_CASE("kernel sanity: unit variance, symmetry, smoothness at 0") {
    RngStream rng(derive_seed(81, 0));
    for (const CovKernel& k :
         {kernels::bargmann_fock(1), kernels::bargmann_fock(2), kernels::berry(1),
          kernels::berry(2),
          kernels::finite_atom({0.25, 0.75}, {pt1(1.0), pt1(2.0)})}) {
        Eigen::VectorXd zero = Eigen::VectorXd::Zero(k.dim);
        CHECK(k.r(zero) == doctest::Approx(1.0).epsilon(1e-12));
        for (int t = 0; t < 8; ++t) {
            Eigen::VectorXd x(k.dim);
            for (int i = 0; i < k.dim; ++i) x[i] = rng.uniform(-2.0, 2.0);
            CHECK(k.r(x) == doctest::Approx(k.r((-x).eval())).epsilon(1e-10));
        }
    }
}

TEST_CASE("cov_entry examples for Bargmann-Fock") {
    CovKernel bf = kernels::bargmann_fock(1);
    const auto zero = pt1(0.0);
    CHECK(cov_entry(bf, zero, MultiIndex({0}), zero, MultiIndex({0})) == doctest::Approx(1.0));
    // E[f f'] = -r'(0) = 0
    CHECK(cov_entry(bf, zero, MultiIndex({0}), zero, MultiIndex({1})) == doctest::Approx(0.0));
    // E[f' f'] = -r''(0) = 1
    CHECK(cov_entry(bf, zero, MultiIndex({1}), zero, MultiIndex({1})) == doctest::Approx(1.0));
    // against central differences of r
    const double h = 1e-4;
    const double fd = (bf.r(pt1(h)) - 2.0 * bf.r(pt1(0.0)) + bf.r(pt1(-h))) / (h * h);
    CHECK(cov_entry(bf, zero, MultiIndex({1}), zero, MultiIndex({1})) ==
          doctest::Approx(-fd).epsilon(1e-6));
    CHECK(bf.lambda2() == doctest::Approx(1.0));
    CHECK(bf.lambda4() == doctest::Approx(3.0));

    CHECK_THROWS_AS(
        cov_entry(kernels::bargmann_fock(1, 1), zero, MultiIndex({2}), zero, MultiIndex({1})),
        DimensionError);
}

TEST_CASE("Bargmann-Fock one-jet covariance at a point is the identity") {
    CovKernel bf = kernels::bargmann_fock(1);
    JetCov jc(bf, {pt1(0.0)}, 1, 1);
    CHECK((jc.matrix() - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("Berry n=1 two-jet covariance matrix") {
    CovKernel berry = kernels::berry(1);
    JetCov jc(berry, {pt1(0.0)}, 2, 1);
    Eigen::MatrixXd expected(3, 3);
    expected << 1, 0, -1, 0, 1, 0, -1, 0, 1;
    CHECK((jc.matrix() - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("kernel decay separates far sites") {
    CovKernel bf = kernels::bargmann_fock(1);
    JetCov jc(bf, {pt1(0.0), pt1(10.0)}, 0, 1);
    CHECK(std::abs(jc.matrix()(0, 1)) < 1e-20);
    CHECK(jc.matrix()(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("jet covariance is symmetric PSD for shipped kernels") {
    for (const CovKernel& k : {kernels::bargmann_fock(1), kernels::bargmann_fock(2),
                               kernels::berry(1), kernels::berry(2)}) {
        const int q = std::min(3, k.max_jet);
        std::vector<Eigen::VectorXd> sites;
        if (k.dim == 1)
            sites = {pt1(0.0), pt1(0.4)};
        else
            sites = {pt2(0.0, 0.0), pt2(0.3, -0.2)};
        JetCov jc(k, sites, q, 1);
        CHECK((jc.matrix() - jc.matrix().transpose()).cwiseAbs().maxCoeff() < 1e-10);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jc.matrix());
        CHECK(eig.eigenvalues()[0] > -1e-10);
    }
}

TEST_CASE("Berry kernels witness the Helmholtz relation at covariance level") {
    RngStream rng(derive_seed(83, 1));
    // n = 1: r'' + r = 0
    CovKernel b1 = kernels::berry(1);
    for (int t = 0; t < 6; ++t) {
        Eigen::VectorXd x = pt1(rng.uniform(-3.0, 3.0));
        CHECK(b1.r_deriv(MultiIndex({2}), x) + b1.r(x) == doctest::Approx(0.0).epsilon(1e-12));
    }
    // n = 2: Laplacian r + r = 0
    CovKernel b2 = kernels::berry(2);
    for (int t = 0; t < 6; ++t) {
        Eigen::VectorXd x = pt2(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        const double lap =
            b2.r_deriv(MultiIndex({2, 0}), x) + b2.r_deriv(MultiIndex({0, 2}), x);
        CHECK(lap + b2.r(x) == doctest::Approx(0.0).epsilon(1e-8));
    }
    // stationary independence at a point: E[f df/dx_i] = 0 exactly
    const auto zero2 = Eigen::VectorXd::Zero(2).eval();
    CHECK(cov_entry(b2, zero2, MultiIndex({0, 0}), zero2, MultiIndex({1, 0})) == 0.0);
}

TEST_CASE("Berry n=2 correlation is the Bessel J0 profile") {
    CovKernel b2 = kernels::berry(2);
    RngStream rng(derive_seed(85, 0));
    for (int t = 0; t < 10; ++t) {
        Eigen::VectorXd x = pt2(rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0));
        CHECK(b2.r(x) == doctest::Approx(std::cyl_bessel_j(0.0, x.norm())).epsilon(1e-12));
    }
}

TEST_CASE("independent components tensor as block-diagonal jet covariance") {
    CovKernel bf = kernels::bargmann_fock(1);
    JetCov joint(bf, {pt1(0.0), pt1(0.7)}, 1, 2);
    JetCov single(bf, {pt1(0.0), pt1(0.7)}, 1, 1);
    // per (site, component) blocks of size 2; cross-component entries vanish
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    CHECK(joint.matrix()(joint.row(s, 0, a), joint.row(t, 1, b)) == 0.0);
                    CHECK(joint.matrix()(joint.row(s, 0, a), joint.row(t, 0, b)) ==
                          doctest::Approx(single.matrix()(single.row(s, 0, a),
                                                          single.row(t, 0, b))));
                    CHECK(joint.matrix()(joint.row(s, 1, a), joint.row(t, 1, b)) ==
                          doctest::Approx(single.matrix()(single.row(s, 0, a),
                                                          single.row(t, 0, b))));
                }
}

TEST_CASE("nondegeneracy certification") {
    // Bargmann-Fock: certified at q <= 3 with solid margin
    for (int n : {1, 2}) {
        for (int q = 1; q <= 3; ++q) {
            auto rep = nondegeneracy_check(kernels::bargmann_fock(n), q);
            CHECK(rep.certified);
            CHECK(rep.min_eigenvalue > 0.05);
        }
    }

    // Berry n=2: certified at q=1, degenerate at q=2 with the Helmholtz
    // null pattern (1, 0, 0, 1, 0, 1)/sqrt(3)
    auto rep1 = nondegeneracy_check(kernels::berry(2), 1);
    CHECK(rep1.certified);

    auto rep2 = nondegeneracy_check(kernels::berry(2), 2);
    CHECK_FALSE(rep2.certified);
    CHECK(rep2.min_eigenvalue <= 1e-8);
    Eigen::VectorXd pattern = Eigen::VectorXd::Zero(6);
    pattern[0] = 1.0;
    pattern[3] = 1.0;
    pattern[5] = 1.0;
    pattern.normalize();
    CHECK(std::abs(rep2.null_vector.dot(pattern)) > 0.999);
}

TEST_CASE("field samples are seeded-deterministic") {
    CovKernel bf = kernels::bargmann_fock(1);
    auto grid = grid_1d(0.0, 1.0, 21);
    std::vector<MultiIndex> derivs{MultiIndex({0}), MultiIndex({1})};
    FieldSample a = sample_field(bf, grid, derivs, 12345);
    FieldSample b = sample_field(bf, grid, derivs, 12345);
    CHECK((a.stacked - b.stacked).cwiseAbs().maxCoeff() == 0.0);
    FieldSample c = sample_field(bf, grid, derivs, 54321);
    CHECK((a.stacked - c.stacked).cwiseAbs().maxCoeff() > 1e-6);
}

TEST_CASE("sampled moments match the kernel") {
    CovKernel bf = kernels::bargmann_fock(1);
    FieldSampler sampler(bf, {pt1(0.0), pt1(1.0)}, {MultiIndex({0})}, 1);
    const int draws = 100000;
    double s00 = 0.0, s11 = 0.0, s01 = 0.0;
    for (int i = 0; i < draws; ++i) {
        Eigen::VectorXd v = sampler.draw(777, i);
        s00 += v[0] * v[0];
        s11 += v[1] * v[1];
        s01 += v[0] * v[1];
    }
    // var f(0) = 1 within 3 SE (SE of a chi-square mean ~ sqrt(2/n))
    CHECK(s00 / draws == doctest::Approx(1.0).epsilon(0.02));
    CHECK(s11 / draws == doctest::Approx(1.0).epsilon(0.02));
    // corr(f(0), f(1)) = e^{-1/2}
    const double corr = (s01 / draws) / std::sqrt((s00 / draws) * (s11 / draws));
    CHECK(corr == doctest::Approx(std::exp(-0.5)).epsilon(0.033));
}

TEST_CASE("rank-deficient cosine kernel still samples (clamped zero modes)") {
    // r(t) = cos t on a dense grid has jet covariance of rank 2; the
    // eigenvalue clamp must accept it and produce genuine cosine paths.
    CovKernel cosk = kernels::finite_atom({1.0}, {pt1(1.0)});
    auto grid = grid_1d(0.0, 2.0 * std::numbers::pi, 64);
    std::vector<MultiIndex> derivs{MultiIndex({0}), MultiIndex({1})};
    FieldSampler sampler(cosk, grid, derivs, 1);
    Eigen::VectorXd v = sampler.draw(5, 0);
    // the path must satisfy f = a cos + b sin: check f(0) = a, f'(0) = b
    // reproduce f at an arbitrary site
    const double a = v[0], b = v[1];
    const double x = grid[40][0];
    CHECK(v[80] == doctest::Approx(a * std::cos(x) + b * std::sin(x)).epsilon(1e-5));
}

TEST_CASE("scaled kernels carry amplitude into covariances") {
    CovKernel bf = kernels::bargmann_fock(1);
    CovKernel big = kernels::scaled(bf, 4.0);
    const auto zero = pt1(0.0);
    CHECK(cov_entry(big, zero, MultiIndex({0}), zero, MultiIndex({0})) == doctest::Approx(4.0));
    CHECK(big.r(zero) == doctest::Approx(1.0));  // correlation stays unit
}
