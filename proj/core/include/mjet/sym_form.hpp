#pragma once

#include <Eigen/Core>
#include <vector>

#include "mjet/multi_index.hpp"
#include "mjet/poly.hpp"

namespace mjet {

/// Symmetric k-linear form on R^n.
///
/// Storage: one tensor entry per orbit of index tuples. coeff(alpha) is the
/// value of the form on (e_1^{x alpha_1}, ..., e_n^{x alpha_n}), indexed by
/// the multi-indices with |alpha| = k in graded-lex order. Applying the form
/// to k copies of v therefore gives the homogeneous polynomial
///   sum_{|alpha|=k} (k!/alpha!) * coeff(alpha) * v^alpha,
/// the multinomial weight k!/alpha! being the orbit size.
class SymForm {
public:
    SymForm(int n, int order);

    static SymForm scalar(int n, double value);  // order 0

    int dim_space() const { return n_; }
    int order() const { return k_; }
    int size() const { return static_cast<int>(alphas_.size()); }

    const std::vector<MultiIndex>& index_set() const { return alphas_; }
    const Eigen::VectorXd& coeffs() const { return coeffs_; }
    Eigen::VectorXd& coeffs() { return coeffs_; }
    double coeff(const MultiIndex& alpha) const;
    void set_coeff(const MultiIndex& alpha, double value);

    /// Full application to k vectors. Uses tuple expansion for k <= 4 and
    /// the (2^k - 1)-term polarization identity for larger k.
    double apply(const std::vector<Eigen::VectorXd>& args) const;

    /// Diagonal application q(v) = S(v, ..., v).
    double apply_diagonal(const Eigen::VectorXd& v) const;

    /// Slot-wise application to affine arguments: each argument is an
    /// n-vector of polynomials of degree <= 1 (such as X - x_i), and the
    /// result is the degree <= k polynomial of the full multilinear
    /// expansion. Same expansion/polarization switch as apply().
    Poly apply_poly(const std::vector<std::vector<Poly>>& args) const;

    SymForm operator+(const SymForm& o) const;
    SymForm operator*(double s) const;

private:
    double apply_expansion(const std::vector<Eigen::VectorXd>& args) const;
    double apply_polarization(const std::vector<Eigen::VectorXd>& args) const;
    Poly apply_poly_expansion(const std::vector<std::vector<Poly>>& args) const;
    Poly apply_poly_polarization(const std::vector<std::vector<Poly>>& args) const;
    Poly diagonal_poly(const std::vector<Poly>& w) const;

    int n_;
    int k_;
    std::vector<MultiIndex> alphas_;
    std::unordered_map<MultiIndex, int, MultiIndexHash> lookup_;
    Eigen::VectorXd coeffs_;
};

/// The argument vector (X - x) whose i-th slot is the affine polynomial
/// X_i - x_i over n = x.size() variables.
std::vector<Poly> affine_argument(const Eigen::VectorXd& x);

}  // namespace mjet
