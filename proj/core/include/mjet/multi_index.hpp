#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace mjet {

/// Exponent vector of a monomial in n variables. All entries are >= 0.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> exponents);

    /// Zero multi-index in n variables.
    static MultiIndex zero(int n);
    /// Unit multi-index e_i in n variables.
    static MultiIndex unit(int n, int i);

    int dim() const { return static_cast<int>(exp_.size()); }
    int order() const { return order_; }  // |alpha|
    int operator[](int i) const { return exp_[i]; }
    const std::vector<int>& exponents() const { return exp_; }

    MultiIndex operator+(const MultiIndex& o) const;

    /// alpha! = prod alpha_i!
    double factorial() const;
    /// |alpha|! / alpha!
    double multinomial() const;

    bool operator==(const MultiIndex& o) const { return exp_ == o.exp_; }

private:
    std::vector<int> exp_;
    int order_ = 0;
};

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& a) const {
        std::size_t h = 0x9E3779B97F4A7C15ULL ^ a.dim();
        for (int e : a.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001B3ULL;
        return h;
    }
};

/// All multi-indices with |alpha| <= degree in n variables, in graded
/// lexicographic order: ascending total degree, and within a degree block
/// descending lexicographically on exponents (X1 before X2 before ...).
/// This single indexing convention is shared by every module that builds
/// coefficient vectors or evaluation matrices.
class MonomialBasis {
public:
    MonomialBasis(int n, int degree);

    int dim_space() const { return n_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(list_.size()); }

    const MultiIndex& operator[](int i) const { return list_[i]; }
    const std::vector<MultiIndex>& indices() const { return list_; }

    /// Index of alpha in this basis; throws DimensionError if |alpha| > degree.
    int index_of(const MultiIndex& alpha) const;

    /// All multi-indices with |alpha| == k, in the same in-degree order.
    static std::vector<MultiIndex> exact_degree(int n, int k);

    static std::int64_t binomial(int n, int k);
    /// dim R_d[X_1..X_n] = C(n+d, n)
    static std::int64_t dimension(int n, int degree);

private:
    int n_;
    int degree_;
    std::vector<MultiIndex> list_;
    std::unordered_map<MultiIndex, int, MultiIndexHash> lookup_;
};

}  // namespace mjet
