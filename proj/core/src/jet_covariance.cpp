#include "mjet/jet_covariance.hpp"

#include <Eigen/Dense>
#include <string>

#include "mjet/errors.hpp"

namespace mjet {

double cov_entry(const CovKernel& kernel, const Eigen::VectorXd& x, const MultiIndex& alpha,
                 const Eigen::VectorXd& y, const MultiIndex& beta) {
    if (alpha.order() + beta.order() > 2 * kernel.max_jet)
        throw DimensionError("cov_entry: derivative order " +
                             std::to_string(alpha.order() + beta.order()) +
                             " exceeds 2 * max_jet = " + std::to_string(2 * kernel.max_jet));
    if (x.size() != kernel.dim || y.size() != kernel.dim)
        throw DimensionError("cov_entry: site dimension mismatch");
    const double sign = (beta.order() % 2 == 0) ? 1.0 : -1.0;
    return kernel.amplitude * sign * kernel.r_deriv(alpha + beta, x - y);
}

JetCov::JetCov(const CovKernel& kernel, std::vector<Eigen::VectorXd> sites, int order,
               int components)
    : sites_(std::move(sites)), components_(components) {
    if (order > kernel.max_jet)
        throw DimensionError("JetCov: order exceeds kernel max_jet");
    derivs_ = MonomialBasis(kernel.dim, order).indices();
    assemble(kernel);
}

JetCov::JetCov(const CovKernel& kernel, std::vector<Eigen::VectorXd> sites,
               std::vector<MultiIndex> derivatives, int components)
    : sites_(std::move(sites)), derivs_(std::move(derivatives)), components_(components) {
    assemble(kernel);
}

void JetCov::assemble(const CovKernel& kernel) {
    if (sites_.empty() || derivs_.empty() || components_ < 1)
        throw DimensionError("JetCov: empty sites, derivatives or components");
    const int d = static_cast<int>(derivs_.size());
    const int per_site = components_ * d;
    const int total = static_cast<int>(sites_.size()) * per_site;
    matrix_.resize(total, total);
    for (std::size_t sj = 0; sj < sites_.size(); ++sj) {
        for (std::size_t sk = sj; sk < sites_.size(); ++sk) {
            for (int a = 0; a < d; ++a) {
                for (int b = 0; b < d; ++b) {
                    const double value =
                        cov_entry(kernel, sites_[sj], derivs_[a], sites_[sk], derivs_[b]);
                    for (int c = 0; c < components_; ++c) {
                        const int rr = row(static_cast<int>(sj), c, a);
                        const int cc = row(static_cast<int>(sk), c, b);
                        matrix_(rr, cc) = value;
                        matrix_(cc, rr) = value;
                        // Independent components: off-component entries stay zero.
                    }
                }
            }
        }
    }
    // Zero the cross-component blocks explicitly (matrix_ starts uninitialized).
    for (int rr = 0; rr < total; ++rr) {
        for (int cc = 0; cc < total; ++cc) {
            const int comp_r = (rr % per_site) / d;
            const int comp_c = (cc % per_site) / d;
            if (comp_r != comp_c) matrix_(rr, cc) = 0.0;
        }
    }
}

int JetCov::row(int site, int component, int deriv_slot) const {
    return (site * components_ + component) * static_cast<int>(derivs_.size()) + deriv_slot;
}

std::vector<int> JetCov::value_rows() const {
    std::vector<int> rows;
    for (std::size_t s = 0; s < sites_.size(); ++s)
        for (int c = 0; c < components_; ++c)
            for (std::size_t a = 0; a < derivs_.size(); ++a)
                if (derivs_[a].order() == 0) rows.push_back(row(static_cast<int>(s), c, static_cast<int>(a)));
    return rows;
}

NondegeneracyReport nondegeneracy_check(const CovKernel& kernel, int order, int components) {
    const Eigen::VectorXd origin = Eigen::VectorXd::Zero(kernel.dim);
    JetCov jc(kernel, {origin}, order, components);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jc.matrix());
    NondegeneracyReport report;
    report.min_eigenvalue = eig.eigenvalues()[0];
    report.certified = report.min_eigenvalue > 1e-8;
    report.null_vector = eig.eigenvectors().col(0);
    report.derivative_order = jc.derivatives();
    return report;
}

}  // namespace mjet
