#include "mjet/conditional_gaussian.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mjet/errors.hpp"
#include "mjet/rng.hpp"

namespace mjet {

CondGaussian::CondGaussian(const Eigen::MatrixXd& joint, const std::vector<int>& value_rows) {
    const int n = static_cast<int>(joint.rows());
    std::vector<int> vrows = value_rows;
    std::sort(vrows.begin(), vrows.end());
    std::vector<char> is_value(n, 0);
    for (int r : vrows) {
        if (r < 0 || r >= n) throw DimensionError("CondGaussian: value row out of range");
        is_value[r] = 1;
    }
    for (int r = 0; r < n; ++r)
        if (!is_value[r]) kept_rows_.push_back(r);

    const int nv = static_cast<int>(vrows.size());
    const int nd = static_cast<int>(kept_rows_.size());
    Eigen::MatrixXd svv(nv, nv), sdv(nd, nv), sdd(nd, nd);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) svv(i, j) = joint(vrows[i], vrows[j]);
    for (int i = 0; i < nd; ++i)
        for (int j = 0; j < nv; ++j) sdv(i, j) = joint(kept_rows_[i], vrows[j]);
    for (int i = 0; i < nd; ++i)
        for (int j = 0; j < nd; ++j) sdd(i, j) = joint(kept_rows_[i], kept_rows_[j]);

    // Invertibility of the value block decides whether conditioning makes
    // sense at all; detect through the eigenvalues rather than LLT noise.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> veig(svv);
    const double vmin = veig.eigenvalues()[0];
    const double vmax = veig.eigenvalues()[nv - 1];
    if (vmin <= 1e-9 * std::max(vmax, 1.0))
        throw DegenerateConditioningError(
            "CondGaussian: value block singular (min eigenvalue " + std::to_string(vmin) + ")",
            vmin);

    const Eigen::MatrixXd solve = veig.eigenvectors() *
                                  veig.eigenvalues().cwiseInverse().asDiagonal() *
                                  veig.eigenvectors().transpose();
    cond_cov_ = sdd - sdv * solve * sdv.transpose();
    cond_cov_ = 0.5 * (cond_cov_ + cond_cov_.transpose());

    double logdet = 0.0;
    for (int i = 0; i < nv; ++i) logdet += std::log(2.0 * std::numbers::pi * veig.eigenvalues()[i]);
    value_norm_ = std::exp(0.5 * logdet);

    if (nd > 0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cond_cov_);
        const double cmin = eig.eigenvalues()[0];
        // The Schur subtraction cancels to machine precision amplified by
        // the value block's condition number; negatives inside that band are
        // rounding, anything lower is a genuinely indefinite input.
        const double scale = std::max(sdd.diagonal().maxCoeff(), 1.0);
        const double schur_tol = 64.0 * 2.2e-16 * scale * (vmax / vmin);
        if (cmin < -schur_tol)
            throw NotPositiveSemiDefiniteError(
                "CondGaussian: conditional covariance indefinite (min eigenvalue " +
                    std::to_string(cmin) + ")",
                cmin);
        transform_ = eig.eigenvectors() * eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
    }
}

CondGaussian::CondGaussian(const JetCov& jc, const std::vector<int>& value_rows)
    : CondGaussian(jc.matrix(), value_rows) {}

Eigen::VectorXd CondGaussian::draw(std::uint64_t seed, std::uint64_t index) const {
    RngStream rng(derive_seed(seed, index));
    Eigen::VectorXd z(dim());
    rng.fill_normal(z.data(), static_cast<std::size_t>(z.size()));
    return transform_ * z;
}

}  // namespace mjet
