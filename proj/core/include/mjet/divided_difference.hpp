#pragma once

#include <Eigen/Core>
#include <vector>

#include "mjet/fn_oracle.hpp"
#include "mjet/sym_form.hpp"

namespace mjet {

/// Controls the quadrature inside divided_difference. Polynomial oracles
/// always take the exact Grundmann-Moller path regardless of these knobs.
struct DividedDiffOptions {
    double abs_tol = 1e-9;   // adaptive tolerance for general smooth oracles
    int max_pieces = 20000;  // subdivision cap per coefficient
};

/// Divided difference f[x_0, ..., x_k] of f at k+1 points in R^n: the
/// symmetric k-linear form obtained by averaging D^k f over the simplex
/// spanned by the points. Entry alpha (|alpha| = k) is the integral of
/// d^alpha f along t -> sum_i t_i x_i against nu_k. Repeated points need
/// no special casing; the integral is already well defined on the diagonal.
SymForm divided_difference(const FnOracle& f, const std::vector<Eigen::VectorXd>& points,
                           const DividedDiffOptions& opts = {});

/// Classical 1-D divided difference by the recursive Newton table, with
/// confluent (Hermite) entries at repeated points:
///   f[x,...,x] (j+1 copies) = f^(j)(x) / j!.
/// Repeats must be exact; derivative data up to the multiplicity comes from
/// the oracle. Serves as the independent oracle for the simplex-integral
/// route (the two sides of the Hermite-Genocchi identity).
double divdiff_1d_classical(const FnOracle& f, std::vector<double> points);

}  // namespace mjet
