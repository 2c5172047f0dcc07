#include <Eigen/Core>

#include "benchmark/benchmark.h"
#include "mjet/kac_rice.hpp"

namespace {

using namespace mjet;

void BM_rho2_monte_carlo(benchmark::State& state) {
    const CovKernel bf = kernels::bargmann_fock(1);
    Eigen::MatrixXd pts(2, 1);
    pts << 0.0, 0.5;
    const Configuration config(pts);
    McOptions mc;
    mc.samples = state.range(0);
    mc.seed = 42;
    for (auto _ : state) benchmark::DoNotOptimize(rho_p(bf, 1, config, mc));
    state.SetItemsProcessed(state.iterations() * mc.samples);
}
BENCHMARK(BM_rho2_monte_carlo)->Arg(10000)->Arg(100000);

void BM_rho2_near_diagonal(benchmark::State& state) {
    const CovKernel bf = kernels::bargmann_fock(1);
    Eigen::MatrixXd pts(2, 1);
    pts << 0.0, 1e-3;
    const Configuration config(pts);
    McOptions mc;
    mc.samples = 20000;
    mc.seed = 42;
    for (auto _ : state) benchmark::DoNotOptimize(rho_p(bf, 1, config, mc));
}
BENCHMARK(BM_rho2_near_diagonal);

}  // namespace
