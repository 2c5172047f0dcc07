#include "mjet/multi_index.hpp"

#include <numeric>
#include <string>

#include "mjet/errors.hpp"

namespace mjet {

MultiIndex::MultiIndex(std::vector<int> exponents) : exp_(std::move(exponents)) {
    for (int e : exp_) {
        if (e < 0) throw DimensionError("MultiIndex: negative exponent");
    }
    order_ = std::accumulate(exp_.begin(), exp_.end(), 0);
}

MultiIndex MultiIndex::zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }

MultiIndex MultiIndex::unit(int n, int i) {
    std::vector<int> e(n, 0);
    e.at(i) = 1;
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    if (dim() != o.dim()) throw DimensionError("MultiIndex: dimension mismatch in +");
    std::vector<int> e(exp_);
    for (int i = 0; i < dim(); ++i) e[i] += o.exp_[i];
    return MultiIndex(std::move(e));
}

double MultiIndex::factorial() const {
    double f = 1.0;
    for (int e : exp_)
        for (int j = 2; j <= e; ++j) f *= j;
    return f;
}

double MultiIndex::multinomial() const {
    double f = 1.0;
    for (int j = 2; j <= order_; ++j) f *= j;
    return f / factorial();
}

namespace {

void enumerate_degree(int n, int k, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
    if (n == 1) {
        prefix.push_back(k);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = k; e >= 0; --e) {
        prefix.push_back(e);
        enumerate_degree(n - 1, k - e, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> MonomialBasis::exact_degree(int n, int k) {
    std::vector<MultiIndex> out;
    std::vector<int> prefix;
    enumerate_degree(n, k, prefix, out);
    return out;
}

MonomialBasis::MonomialBasis(int n, int degree) : n_(n), degree_(degree) {
    if (n < 1) throw DimensionError("MonomialBasis: need n >= 1");
    if (degree < 0) throw DimensionError("MonomialBasis: need degree >= 0");
    for (int k = 0; k <= degree; ++k) {
        for (auto& a : exact_degree(n, k)) list_.push_back(std::move(a));
    }
    for (int i = 0; i < size(); ++i) lookup_.emplace(list_[i], i);
}

int MonomialBasis::index_of(const MultiIndex& alpha) const {
    auto it = lookup_.find(alpha);
    if (it == lookup_.end())
        throw DimensionError("MonomialBasis: multi-index of degree " +
                             std::to_string(alpha.order()) + " not in basis of degree " +
                             std::to_string(degree_));
    return it->second;
}

std::int64_t MonomialBasis::binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t MonomialBasis::dimension(int n, int degree) { return binomial(n + degree, n); }

}  // namespace mjet
