#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "mjet/errors.hpp"
#include "mjet/field_sampler.hpp"
#include "mjet/kac_rice.hpp"

namespace mjet {

/// Zeros of a scalar function on a half-open window [a, b), one per sign
/// change, bisection-refined. Residuals are |f(z)|; derivatives are f'(z)
/// when derivative data is available (NaN otherwise).
struct ZeroSet1D {
    std::vector<double> zeros;        // strictly increasing
    std::vector<double> residuals;    // |f(z)|
    std::vector<double> derivatives;  // f'(z)
    std::vector<Warning> warnings;
};

/// Sign-change scan on a uniform grid of `cells` cells over [a, b), then
/// bisection. A zero lying exactly on a grid point is reported once, at
/// that point; the half-open convention keeps counts additive across
/// adjacent windows. Cells whose endpoints agree in sign but whose
/// derivative data reveals an interior extremum crossing zero trigger a
/// ResolutionWarning and both roots are recovered.
ZeroSet1D find_zeros_1d(const std::function<double(double)>& f,
                        const std::function<double(double)>& df, double a, double b, int cells,
                        int refine_iters = 80);

/// One sampled realization of (f, f') on a uniform grid, evaluated off-grid
/// by cubic Hermite interpolation. The interpolant is the deterministic
/// stand-in for the path between grid sites; with the documented grid
/// spacing its sign pattern matches the field's far below Monte Carlo
/// resolution.
class SampledPath1D {
public:
    SampledPath1D(std::vector<double> xs, std::vector<double> values, std::vector<double> derivs);

    /// Reads slots (value, derivative) of a 1-D FieldSample.
    static SampledPath1D from_sample(const FieldSample& sample);

    double operator()(double x) const;
    double deriv(double x) const;
    double a() const { return xs_.front(); }
    double b() const { return xs_.back(); }
    int cells() const { return static_cast<int>(xs_.size()) - 1; }
    double sup_abs() const;

private:
    std::vector<double> xs_, values_, derivs_;
};

ZeroSet1D find_zeros_1d(const SampledPath1D& path, int refine_iters = 80);

/// A planar scalar field with gradient, as callables (exact or
/// interpolated from samples).
struct Field2D {
    std::function<double(const Eigen::Vector2d&)> value;
    std::function<Eigen::Vector2d(const Eigen::Vector2d&)> gradient;
};

/// Bilinear interpolation of sampled values and gradients on a uniform
/// grid over a box; the gradient channel interpolates the sampled
/// derivatives (not the bilinear surface's own slopes).
Field2D bilinear_field(const Box& box, int nx, int ny, const std::vector<double>& values,
                       const std::vector<double>& dx, const std::vector<double>& dy);

/// Common zeros of a pair of planar fields on a box: candidate cells are
/// those whose corner signs are mixed in both components; each candidate is
/// Newton-refined from the cell center. Cells where Newton fails to settle
/// are counted through the topological degree of (f1, f2) along the cell
/// boundary and flagged.
struct ZeroPoints2D {
    std::vector<Eigen::Vector2d> points;
    int flagged_cells = 0;
    std::vector<Warning> warnings;
};

ZeroPoints2D find_zeros_2d_points(const Field2D& f1, const Field2D& f2, const Box& box,
                                  int grid_cells, int newton_iters = 30);

}  // namespace mjet
