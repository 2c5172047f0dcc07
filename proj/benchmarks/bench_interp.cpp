#include <Eigen/Core>

#include "benchmark/benchmark.h"
#include "mjet/divided_difference.hpp"
#include "mjet/kergin.hpp"
#include "mjet/rng.hpp"

namespace {

using namespace mjet;

std::vector<Eigen::VectorXd> random_points(int n, int p, std::uint64_t seed) {
    RngStream rng(derive_seed(seed, 0));
    std::vector<Eigen::VectorXd> pts;
    for (int i = 0; i < p; ++i) {
        Eigen::VectorXd x(n);
        for (int c = 0; c < n; ++c) x[c] = rng.uniform(-1.0, 1.0);
        pts.push_back(x);
    }
    return pts;
}

void BM_divided_difference_poly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int p = static_cast<int>(state.range(1));
    RngStream rng(derive_seed(7, 1));
    Poly q(n, p - 1);
    for (int i = 0; i < q.coeffs().size(); ++i) q.coeffs()[i] = rng.uniform(-1.0, 1.0);
    const FnOracle f = oracles::from_poly(q);
    const auto pts = random_points(n, p, 11);
    for (auto _ : state) benchmark::DoNotOptimize(divided_difference(f, pts));
}
BENCHMARK(BM_divided_difference_poly)->Args({2, 3})->Args({2, 5})->Args({3, 5});

void BM_divided_difference_smooth(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int p = static_cast<int>(state.range(1));
    Eigen::VectorXd xi(n);
    for (int i = 0; i < n; ++i) xi[i] = 0.8 + 0.3 * i;
    const FnOracle f = oracles::sin_dot(xi, 0.2);
    const auto pts = random_points(n, p, 13);
    for (auto _ : state) benchmark::DoNotOptimize(divided_difference(f, pts));
}
BENCHMARK(BM_divided_difference_smooth)->Args({2, 3})->Args({2, 4});

void BM_kergin_poly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int p = static_cast<int>(state.range(1));
    RngStream rng(derive_seed(7, 2));
    Poly q(n, p - 1);
    for (int i = 0; i < q.coeffs().size(); ++i) q.coeffs()[i] = rng.uniform(-1.0, 1.0);
    const auto pts = random_points(n, p, 17);
    for (auto _ : state) benchmark::DoNotOptimize(kergin(q, pts));
}
BENCHMARK(BM_kergin_poly)->Args({2, 4})->Args({3, 5});

}  // namespace
