#include <Eigen/Core>

#include "benchmark/benchmark.h"
#include "mjet/eval_map.hpp"
#include "mjet/field_sampler.hpp"
#include "mjet/rng.hpp"

namespace {

using namespace mjet;

void BM_ev_kernel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int p = static_cast<int>(state.range(1));
    RngStream rng(derive_seed(23, 0));
    Eigen::MatrixXd pts(p, n);
    for (int i = 0; i < p; ++i)
        for (int c = 0; c < n; ++c) pts(i, c) = rng.uniform(-1.0, 1.0);
    const Configuration config(pts);
    for (auto _ : state) benchmark::DoNotOptimize(ev_kernel(config));
}
BENCHMARK(BM_ev_kernel)->Args({2, 3})->Args({2, 5})->Args({3, 5});

void BM_field_sampler_factorize(benchmark::State& state) {
    const int sites = static_cast<int>(state.range(0));
    const CovKernel bf = kernels::bargmann_fock(1);
    const auto grid = grid_1d(0.0, 1.0, sites);
    const std::vector<MultiIndex> derivs{MultiIndex::zero(1), MultiIndex::unit(1, 0)};
    for (auto _ : state) {
        FieldSampler sampler(bf, grid, derivs, 1);
        benchmark::DoNotOptimize(sampler.min_eigenvalue());
    }
}
BENCHMARK(BM_field_sampler_factorize)->Arg(26)->Arg(51)->Arg(101);

void BM_field_sampler_draw(benchmark::State& state) {
    const int sites = static_cast<int>(state.range(0));
    const CovKernel bf = kernels::bargmann_fock(1);
    const auto grid = grid_1d(0.0, 1.0, sites);
    const std::vector<MultiIndex> derivs{MultiIndex::zero(1), MultiIndex::unit(1, 0)};
    const FieldSampler sampler(bf, grid, derivs, 1);
    std::uint64_t index = 0;
    for (auto _ : state) benchmark::DoNotOptimize(sampler.draw(5, index++));
}
BENCHMARK(BM_field_sampler_draw)->Arg(51)->Arg(101);

}  // namespace
