#include "mjet/poly.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "mjet/errors.hpp"

namespace mjet {

namespace {

/// Basis tables are immutable and shared; one per (n, degree).
std::shared_ptr<const MonomialBasis> basis_for(int n, int degree) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, degree);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto basis = std::make_shared<const MonomialBasis>(n, degree);
    cache.emplace(key, basis);
    return basis;
}

}  // namespace

Poly::Poly(int n, int degree) : basis_(basis_for(n, degree)) {
    coeffs_ = Eigen::VectorXd::Zero(basis_->size());
}

Poly::Poly(int n, int degree, Eigen::VectorXd coeffs) : basis_(basis_for(n, degree)) {
    if (coeffs.size() != basis_->size())
        throw DimensionError("Poly: coefficient vector has length " +
                             std::to_string(coeffs.size()) + ", basis has size " +
                             std::to_string(basis_->size()));
    coeffs_ = std::move(coeffs);
}

Poly Poly::constant(int n, double value) {
    Poly p(n, 0);
    p.coeffs_[0] = value;
    return p;
}

Poly Poly::shifted_coordinate(int n, int i, double c) {
    Poly p(n, 1);
    p.set_coeff(MultiIndex::unit(n, i), 1.0);
    p.set_coeff(MultiIndex::zero(n), -c);
    return p;
}

Poly Poly::monomial(int n, const MultiIndex& alpha, double coeff) {
    Poly p(n, alpha.order());
    p.set_coeff(alpha, coeff);
    return p;
}

double Poly::coeff(const MultiIndex& alpha) const {
    if (alpha.order() > degree_bound()) return 0.0;
    return coeffs_[basis_->index_of(alpha)];
}

void Poly::set_coeff(const MultiIndex& alpha, double value) {
    coeffs_[basis_->index_of(alpha)] = value;
}

double Poly::operator()(const Eigen::VectorXd& x) const {
    if (x.size() != dim_space()) throw DimensionError("Poly: evaluation point dimension mismatch");
    // Powers x_i^e for e up to the degree bound; then one pass over terms.
    const int n = dim_space();
    const int d = degree_bound();
    Eigen::MatrixXd pow(n, d + 1);
    for (int i = 0; i < n; ++i) {
        pow(i, 0) = 1.0;
        for (int e = 1; e <= d; ++e) pow(i, e) = pow(i, e - 1) * x[i];
    }
    double acc = 0.0;
    for (int t = 0; t < basis_->size(); ++t) {
        const double c = coeffs_[t];
        if (c == 0.0) continue;
        double m = c;
        const MultiIndex& a = (*basis_)[t];
        for (int i = 0; i < n; ++i) m *= pow(i, a[i]);
        acc += m;
    }
    return acc;
}

Poly Poly::derivative(const MultiIndex& alpha) const {
    if (alpha.dim() != dim_space()) throw DimensionError("Poly: derivative index dimension mismatch");
    const int n = dim_space();
    const int dnew = std::max(degree_bound() - alpha.order(), 0);
    Poly out(n, dnew);
    if (alpha.order() > degree_bound()) return out;
    for (int t = 0; t < basis_->size(); ++t) {
        const double c = coeffs_[t];
        if (c == 0.0) continue;
        const MultiIndex& a = (*basis_)[t];
        double factor = 1.0;
        std::vector<int> e(n);
        bool vanishes = false;
        for (int i = 0; i < n; ++i) {
            if (a[i] < alpha[i]) {
                vanishes = true;
                break;
            }
            for (int j = a[i]; j > a[i] - alpha[i]; --j) factor *= j;
            e[i] = a[i] - alpha[i];
        }
        if (vanishes) continue;
        MultiIndex target{e};
        out.coeffs_[out.basis_->index_of(target)] += c * factor;
    }
    return out;
}

int Poly::actual_degree(double tol) const {
    int deg = -1;
    for (int t = 0; t < basis_->size(); ++t)
        if (std::abs(coeffs_[t]) > tol) deg = std::max(deg, (*basis_)[t].order());
    return deg;
}

Poly Poly::with_degree_bound(int degree, double tol) const {
    Poly out(dim_space(), degree);
    for (int t = 0; t < basis_->size(); ++t) {
        const MultiIndex& a = (*basis_)[t];
        if (a.order() <= degree) {
            out.coeffs_[out.basis_->index_of(a)] = coeffs_[t];
        } else if (std::abs(coeffs_[t]) > tol) {
            throw DimensionError("Poly: lowering degree bound would drop a nonzero coefficient");
        }
    }
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    if (dim_space() != o.dim_space()) throw DimensionError("Poly: dimension mismatch in +");
    const int d = std::max(degree_bound(), o.degree_bound());
    Poly out = with_degree_bound(d);
    for (int t = 0; t < o.basis_->size(); ++t)
        out.coeffs_[out.basis_->index_of((*o.basis_)[t])] += o.coeffs_[t];
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + o * (-1.0); }

Poly Poly::operator*(const Poly& o) const {
    if (dim_space() != o.dim_space()) throw DimensionError("Poly: dimension mismatch in *");
    Poly out(dim_space(), degree_bound() + o.degree_bound());
    for (int s = 0; s < basis_->size(); ++s) {
        if (coeffs_[s] == 0.0) continue;
        for (int t = 0; t < o.basis_->size(); ++t) {
            if (o.coeffs_[t] == 0.0) continue;
            MultiIndex sum = (*basis_)[s] + (*o.basis_)[t];
            out.coeffs_[out.basis_->index_of(sum)] += coeffs_[s] * o.coeffs_[t];
        }
    }
    return out;
}

Poly Poly::operator*(double s) const {
    Poly out = *this;
    out.coeffs_ *= s;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    *this = *this + o;
    return *this;
}

}  // namespace mjet
