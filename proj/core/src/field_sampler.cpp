#include "mjet/field_sampler.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "mjet/errors.hpp"
#include "mjet/rng.hpp"

namespace mjet {

FieldSampler::FieldSampler(const CovKernel& kernel, std::vector<Eigen::VectorXd> grid,
                           std::vector<MultiIndex> derivatives, int components)
    : grid_(std::move(grid)), derivs_(std::move(derivatives)), components_(components) {
    JetCov jc(kernel, grid_, derivs_, components_);
    Eigen::MatrixXd cov = jc.matrix();
    const int n = static_cast<int>(cov.rows());

    const double jitter = 1e-12 * cov.trace() / n;
    cov.diagonal().array() += jitter;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
    const Eigen::VectorXd& lam = eig.eigenvalues();
    min_eig_ = lam[0];
    const double max_eig = lam[n - 1];
    const double floor = -1e-10 * std::max(max_eig, 1.0);
    if (min_eig_ < floor)
        throw NotPositiveSemiDefiniteError(
            "FieldSampler: covariance indefinite after jitter (min eigenvalue " +
                std::to_string(min_eig_) + ")",
            min_eig_);

    Eigen::VectorXd root = lam.cwiseMax(0.0).cwiseSqrt();
    transform_ = eig.eigenvectors() * root.asDiagonal();
}

Eigen::VectorXd FieldSampler::draw(std::uint64_t seed, std::uint64_t index) const {
    RngStream rng(derive_seed(seed, index));
    Eigen::VectorXd z(size());
    rng.fill_normal(z.data(), static_cast<std::size_t>(z.size()));
    return transform_ * z;
}

FieldSample FieldSampler::sample(std::uint64_t seed, std::uint64_t index) const {
    FieldSample out;
    out.grid = grid_;
    out.derivatives = derivs_;
    out.stacked = draw(seed, index);
    out.seed = seed;
    return out;
}

FieldSample sample_field(const CovKernel& kernel, const std::vector<Eigen::VectorXd>& grid,
                         const std::vector<MultiIndex>& derivatives, std::uint64_t seed,
                         int components) {
    // Desk-scale guard: dense factorization only.
    const std::size_t stacked = grid.size() * derivatives.size() * components;
    if (stacked > 4000)
        throw DimensionError("sample_field: " + std::to_string(stacked) +
                             " stacked dimensions exceeds the dense-factorization budget");
    FieldSampler sampler(kernel, grid, derivatives, components);
    return sampler.sample(seed);
}

std::vector<Eigen::VectorXd> grid_1d(double a, double b, int count) {
    if (count < 2) throw DimensionError("grid_1d: need at least two sites");
    std::vector<Eigen::VectorXd> grid;
    grid.reserve(count);
    for (int i = 0; i < count; ++i) {
        Eigen::VectorXd x(1);
        x[0] = a + (b - a) * i / (count - 1);
        grid.push_back(x);
    }
    return grid;
}

}  // namespace mjet
