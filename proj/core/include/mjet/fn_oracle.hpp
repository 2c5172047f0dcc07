#pragma once

#include <Eigen/Core>
#include <functional>
#include <limits>
#include <string>
#include <unordered_map>

#include "mjet/multi_index.hpp"
#include "mjet/poly.hpp"

namespace mjet {

/// A smooth function handed to the interpolation machinery together with
/// exact partial derivatives up to a declared order. Derivative estimation
/// is deliberately not provided: divided differences genuinely consume
/// D^k f, and estimated derivatives would contaminate every downstream
/// check. Oracles are stateless and safe to call concurrently.
struct FnOracle {
    int n = 1;
    /// Maximum derivative order available.
    int smoothness = std::numeric_limits<int>::max();
    /// Degree when the function is a polynomial, -1 otherwise. Polynomial
    /// oracles take the exact quadrature path in divided differences.
    int poly_degree = -1;

    std::function<double(const MultiIndex&, const Eigen::VectorXd&)> deriv;

    double operator()(const Eigen::VectorXd& x) const { return deriv(MultiIndex::zero(n), x); }
    double d(const MultiIndex& alpha, const Eigen::VectorXd& x) const { return deriv(alpha, x); }
};

namespace oracles {

/// Wraps a polynomial with its exact derivatives.
FnOracle from_poly(const Poly& p);

/// f(x) = exp(a . x)
FnOracle exp_dot(const Eigen::VectorXd& a);

/// f(x) = sin(xi . x + phase)
FnOracle sin_dot(const Eigen::VectorXd& xi, double phase = 0.0);

/// f(x) = exp(-|x|^2 / 2)
FnOracle gaussian(int n);

/// Pointwise linear combination sum_i w_i f_i.
FnOracle combine(const std::vector<double>& weights, const std::vector<FnOracle>& fns);

}  // namespace oracles

/// Taylor polynomial of order k at x from jet data {d^alpha f(x)}:
///   sum_{|alpha| <= k} d^alpha f(x) / alpha! * (X - x)^alpha.
/// Throws DimensionError if an entry is missing.
Poly taylor_poly(const std::unordered_map<MultiIndex, double, MultiIndexHash>& jet,
                 const Eigen::VectorXd& x, int k);

/// Same, reading the jet from an oracle (requires f.smoothness >= k).
Poly taylor_poly(const FnOracle& f, const Eigen::VectorXd& x, int k);

}  // namespace mjet
