#include <cmath>

#include "doctest.h"
#include "mjet/multi_index.hpp"
#include "mjet/rng.hpp"
#include "mjet/simplex_rule.hpp"

using namespace mjet;

TEST_CASE("rule mass is 1/k!") {
    double factorial = 1.0;
    for (int k = 0; k <= 5; ++k) {
        if (k > 1) factorial *= k;
        for (int deg : {1, 3, 5, 7}) {
            SimplexRule rule = SimplexRule::grundmann_moeller(k, deg);
            double mass = 0.0;
            for (double w : rule.weights()) mass += w;
            CHECK(mass == doctest::Approx(1.0 / factorial).epsilon(1e-14));
        }
    }
}

TEST_CASE("rule integrates barycentric monomials exactly vs Dirichlet") {
    RngStream rng(derive_seed(31, 3));
    for (int k : {1, 2, 3, 4}) {
        for (int deg : {3, 5, 7}) {
            SimplexRule rule = SimplexRule::grundmann_moeller(k, deg);
            CHECK(rule.exactness_degree() >= deg);
            // every monomial of total degree <= exactness, a sample of them
            for (int total = 0; total <= rule.exactness_degree(); ++total) {
                auto monomials = MonomialBasis::exact_degree(k + 1, total);
                for (std::size_t pick = 0; pick < monomials.size();
                     pick += 1 + monomials.size() / 6) {
                    const MultiIndex& gamma = monomials[pick];
                    const double numeric = rule.integrate([&](const Eigen::VectorXd& t) {
                        double v = 1.0;
                        for (int i = 0; i <= k; ++i)
                            for (int e = 0; e < gamma[i]; ++e) v *= t[i];
                        return v;
                    });
                    const double exact = SimplexRule::dirichlet_moment(gamma);
                    CHECK(numeric == doctest::Approx(exact).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("adaptive integration reaches tolerance on smooth integrands") {
    // int over sigma_2 of exp(t1 - t2) d nu_2; oracle = high-order rule.
    auto fn = [](const Eigen::VectorXd& t) { return std::exp(t[1] - t[2]); };
    SimplexRule high = SimplexRule::grundmann_moeller(2, 17);
    const double oracle = high.integrate(fn);
    auto res = integrate_simplex_adaptive(2, fn, 1e-10);
    CHECK(res.value == doctest::Approx(oracle).epsilon(1e-9));

    // k = 0 trivially returns the point value
    auto res0 = integrate_simplex_adaptive(0, [](const Eigen::VectorXd&) { return 4.25; });
    CHECK(res0.value == 4.25);
}
