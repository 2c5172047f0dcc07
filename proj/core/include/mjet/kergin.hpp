#pragma once

#include <Eigen/Core>
#include <vector>

#include "mjet/divided_difference.hpp"
#include "mjet/fn_oracle.hpp"
#include "mjet/poly.hpp"
#include "mjet/sym_form.hpp"

namespace mjet {

/// Kergin interpolating polynomial of f at p points in R^n:
///   K(f, x) = sum_{k=1}^{p} f[x_1,...,x_k](X - x_1, ..., X - x_{k-1}),
/// the unique P in R_{p-1}[X] matching every divided difference of f over
/// subsets of the points. Reduces to Hermite interpolation for n = 1 and to
/// the Taylor polynomial of order p-1 when all points coincide.
Poly kergin(const FnOracle& f, const std::vector<Eigen::VectorXd>& points,
            const DividedDiffOptions& opts = {});

/// Exact-path convenience for polynomial input.
Poly kergin(const Poly& p, const std::vector<Eigen::VectorXd>& points);

/// Newton-form reconstruction: given forms S_j of order j (0 <= j <= p-1)
/// and anchor points x_1..x_{p-1}, returns sum_j S_j(X - x_1, ..., X - x_j).
/// Composed with P -> (P[x_1,...,x_{j+1}])_j it is the identity on
/// R_{p-1}[X].
Poly newton_reconstruct(const std::vector<SymForm>& forms,
                        const std::vector<Eigen::VectorXd>& anchors);

/// Matrix of P -> K(P, x) from R_{p-1}[X] (graded-lex coefficients, ambient
/// degree source_degree) to R_{q-1}[X] where q = points.size(). Columns are
/// the images of the basis monomials, computed through the exact
/// divided-difference path.
Eigen::MatrixXd kergin_map_matrix(const std::vector<Eigen::VectorXd>& points, int source_degree);

}  // namespace mjet
