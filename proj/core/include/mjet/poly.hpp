#pragma once

#include <Eigen/Core>
#include <memory>

#include "mjet/multi_index.hpp"

namespace mjet {

/// Dense multivariate polynomial of bounded degree over the shared
/// graded-lex monomial basis. Coefficient i multiplies X^{basis[i]}.
class Poly {
public:
    Poly(int n, int degree);
    Poly(int n, int degree, Eigen::VectorXd coeffs);

    static Poly constant(int n, double value);
    /// The affine polynomial X_i - c in n variables.
    static Poly shifted_coordinate(int n, int i, double c);
    static Poly monomial(int n, const MultiIndex& alpha, double coeff = 1.0);

    int dim_space() const { return basis_->dim_space(); }
    int degree_bound() const { return basis_->degree(); }
    const MonomialBasis& basis() const { return *basis_; }
    const Eigen::VectorXd& coeffs() const { return coeffs_; }
    Eigen::VectorXd& coeffs() { return coeffs_; }

    double coeff(const MultiIndex& alpha) const;
    void set_coeff(const MultiIndex& alpha, double value);

    double operator()(const Eigen::VectorXd& x) const;

    /// d^alpha P, with degree bound max(degree - |alpha|, 0).
    Poly derivative(const MultiIndex& alpha) const;

    /// Actual degree of the stored coefficients (-1 for the zero polynomial).
    int actual_degree(double tol = 0.0) const;

    /// Returns this polynomial re-indexed with degree bound `degree`.
    /// Raising the bound is always possible; lowering requires the dropped
    /// coefficients to be below tol.
    Poly with_degree_bound(int degree, double tol = 1e-12) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(double s) const;
    Poly& operator+=(const Poly& o);

private:
    std::shared_ptr<const MonomialBasis> basis_;
    Eigen::VectorXd coeffs_;
};

inline Poly operator*(double s, const Poly& p) { return p * s; }

}  // namespace mjet
