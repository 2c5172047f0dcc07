#include "mjet/sym_form.hpp"

#include <cmath>
#include <string>

#include "mjet/errors.hpp"

namespace mjet {

SymForm::SymForm(int n, int order) : n_(n), k_(order) {
    if (n < 1) throw DimensionError("SymForm: need n >= 1");
    if (order < 0) throw DimensionError("SymForm: need order >= 0");
    alphas_ = MonomialBasis::exact_degree(n, order);
    for (int i = 0; i < size(); ++i) lookup_.emplace(alphas_[i], i);
    coeffs_ = Eigen::VectorXd::Zero(size());
}

SymForm SymForm::scalar(int n, double value) {
    SymForm s(n, 0);
    s.coeffs_[0] = value;
    return s;
}

double SymForm::coeff(const MultiIndex& alpha) const {
    auto it = lookup_.find(alpha);
    if (it == lookup_.end()) throw DimensionError("SymForm: multi-index not of this order");
    return coeffs_[it->second];
}

void SymForm::set_coeff(const MultiIndex& alpha, double value) {
    auto it = lookup_.find(alpha);
    if (it == lookup_.end()) throw DimensionError("SymForm: multi-index not of this order");
    coeffs_[it->second] = value;
}

namespace {

/// Walks all tuples (i_1, ..., i_k) in {0..n-1}^k. Returns false when done.
bool next_tuple(std::vector<int>& t, int n) {
    for (int j = static_cast<int>(t.size()) - 1; j >= 0; --j) {
        if (++t[j] < n) return true;
        t[j] = 0;
    }
    return false;
}

}  // namespace

double SymForm::apply_expansion(const std::vector<Eigen::VectorXd>& args) const {
    if (k_ == 0) return coeffs_[0];
    std::vector<int> tuple(k_, 0);
    std::vector<int> type(n_);
    double acc = 0.0;
    do {
        std::fill(type.begin(), type.end(), 0);
        double prod = 1.0;
        for (int j = 0; j < k_; ++j) {
            ++type[tuple[j]];
            prod *= args[j][tuple[j]];
        }
        acc += coeffs_[lookup_.at(MultiIndex{type})] * prod;
    } while (next_tuple(tuple, n_));
    return acc;
}

double SymForm::apply_diagonal(const Eigen::VectorXd& v) const {
    double acc = 0.0;
    for (int i = 0; i < size(); ++i) {
        const MultiIndex& a = alphas_[i];
        double m = a.multinomial() * coeffs_[i];
        for (int j = 0; j < n_; ++j)
            for (int e = 0; e < a[j]; ++e) m *= v[j];
        acc += m;
    }
    return acc;
}

double SymForm::apply_polarization(const std::vector<Eigen::VectorXd>& args) const {
    // S(v_1,...,v_k) = (1/k!) sum_{T nonempty} (-1)^{k-|T|} q(sum_{i in T} v_i)
    double kfact = 1.0;
    for (int j = 2; j <= k_; ++j) kfact *= j;
    double acc = 0.0;
    Eigen::VectorXd w(n_);
    for (unsigned mask = 1; mask < (1u << k_); ++mask) {
        w.setZero();
        int card = 0;
        for (int j = 0; j < k_; ++j) {
            if (mask & (1u << j)) {
                w += args[j];
                ++card;
            }
        }
        const double sign = ((k_ - card) % 2 == 0) ? 1.0 : -1.0;
        acc += sign * apply_diagonal(w);
    }
    return acc / kfact;
}

double SymForm::apply(const std::vector<Eigen::VectorXd>& args) const {
    if (static_cast<int>(args.size()) != k_)
        throw DimensionError("SymForm: arity mismatch, expected " + std::to_string(k_) +
                             " arguments, got " + std::to_string(args.size()));
    for (const auto& a : args)
        if (a.size() != n_) throw DimensionError("SymForm: argument dimension mismatch");
    if (k_ <= 4) return apply_expansion(args);
    return apply_polarization(args);
}

Poly SymForm::diagonal_poly(const std::vector<Poly>& w) const {
    Poly acc = Poly::constant(w[0].dim_space(), 0.0);
    for (int i = 0; i < size(); ++i) {
        if (coeffs_[i] == 0.0) continue;
        const MultiIndex& a = alphas_[i];
        Poly term = Poly::constant(w[0].dim_space(), a.multinomial() * coeffs_[i]);
        for (int j = 0; j < n_; ++j)
            for (int e = 0; e < a[j]; ++e) term = term * w[j];
        acc += term;
    }
    return acc;
}

Poly SymForm::apply_poly_expansion(const std::vector<std::vector<Poly>>& args) const {
    const int nv = k_ == 0 ? n_ : args[0][0].dim_space();
    if (k_ == 0) return Poly::constant(nv, coeffs_[0]);
    std::vector<int> tuple(k_, 0);
    std::vector<int> type(n_);
    Poly acc = Poly::constant(nv, 0.0);
    do {
        std::fill(type.begin(), type.end(), 0);
        for (int j = 0; j < k_; ++j) ++type[tuple[j]];
        const double c = coeffs_[lookup_.at(MultiIndex{type})];
        if (c == 0.0) continue;
        Poly prod = Poly::constant(nv, c);
        for (int j = 0; j < k_; ++j) prod = prod * args[j][tuple[j]];
        acc += prod;
    } while (next_tuple(tuple, n_));
    return acc;
}

Poly SymForm::apply_poly_polarization(const std::vector<std::vector<Poly>>& args) const {
    const int nv = args[0][0].dim_space();
    double kfact = 1.0;
    for (int j = 2; j <= k_; ++j) kfact *= j;
    Poly acc = Poly::constant(nv, 0.0);
    for (unsigned mask = 1; mask < (1u << k_); ++mask) {
        std::vector<Poly> w(n_, Poly::constant(nv, 0.0));
        int card = 0;
        for (int j = 0; j < k_; ++j) {
            if (mask & (1u << j)) {
                for (int i = 0; i < n_; ++i) w[i] += args[j][i];
                ++card;
            }
        }
        const double sign = ((k_ - card) % 2 == 0) ? 1.0 : -1.0;
        acc += diagonal_poly(w) * sign;
    }
    return acc * (1.0 / kfact);
}

Poly SymForm::apply_poly(const std::vector<std::vector<Poly>>& args) const {
    if (static_cast<int>(args.size()) != k_)
        throw DimensionError("SymForm: arity mismatch, expected " + std::to_string(k_) +
                             " arguments, got " + std::to_string(args.size()));
    for (const auto& arg : args) {
        if (static_cast<int>(arg.size()) != n_)
            throw DimensionError("SymForm: argument must be an n-vector of polynomials");
        for (const auto& p : arg)
            if (p.degree_bound() > 1 && p.actual_degree() > 1)
                throw DimensionError("SymForm: argument slots must have degree <= 1");
    }
    if (k_ == 0) return Poly::constant(n_, coeffs_[0]);
    if (k_ <= 4) return apply_poly_expansion(args);
    return apply_poly_polarization(args);
}

SymForm SymForm::operator+(const SymForm& o) const {
    if (n_ != o.n_ || k_ != o.k_) throw DimensionError("SymForm: shape mismatch in +");
    SymForm out = *this;
    out.coeffs_ += o.coeffs_;
    return out;
}

SymForm SymForm::operator*(double s) const {
    SymForm out = *this;
    out.coeffs_ *= s;
    return out;
}

std::vector<Poly> affine_argument(const Eigen::VectorXd& x) {
    const int n = static_cast<int>(x.size());
    std::vector<Poly> arg;
    arg.reserve(n);
    for (int i = 0; i < n; ++i) arg.push_back(Poly::shifted_coordinate(n, i, x[i]));
    return arg;
}

}  // namespace mjet
