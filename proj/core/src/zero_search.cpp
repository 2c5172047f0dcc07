#include "mjet/zero_search.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace mjet {

namespace {

double bisect(const std::function<double(double)>& f, double lo, double hi, double flo,
              int iters) {
    // Invariant: sign change between lo and hi, f(lo) = flo.
    for (int it = 0; it < iters; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) != (fm < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

ZeroSet1D find_zeros_1d(const std::function<double(double)>& f,
                        const std::function<double(double)>& df, double a, double b, int cells,
                        int refine_iters) {
    if (cells < 1) throw DimensionError("find_zeros_1d: need at least one cell");
    ZeroSet1D out;
    const double h = (b - a) / cells;
    auto push = [&](double z) {
        out.zeros.push_back(z);
        out.residuals.push_back(std::abs(f(z)));
        out.derivatives.push_back(df ? df(z) : std::numeric_limits<double>::quiet_NaN());
    };

    std::vector<double> fx(cells + 1);
    for (int i = 0; i <= cells; ++i) fx[i] = f(a + i * h);

    for (int i = 0; i < cells; ++i) {
        const double x0 = a + i * h, x1 = a + (i + 1) * h;
        const double f0 = fx[i], f1 = fx[i + 1];
        if (f0 == 0.0) {
            push(x0);  // grid-point zero belongs to this half-open cell
            continue;
        }
        if ((f0 < 0.0) != (f1 < 0.0)) {
            push(bisect(f, x0, x1, f0, refine_iters));
            continue;
        }
        // Same-sign endpoints: a derivative sign change with an extremum
        // crossing zero means the grid skipped a zero pair.
        if (df) {
            const double d0 = df(x0), d1 = df(x1);
            if ((d0 < 0.0) != (d1 < 0.0)) {
                const double xm = bisect(df, x0, x1, d0, refine_iters);
                const double fm = f(xm);
                if (fm != 0.0 && (fm < 0.0) != (f0 < 0.0)) {
                    out.warnings.push_back(
                        {WarningCode::resolution,
                         "two sign changes inside one cell near x = " + std::to_string(xm) +
                             "; grid spacing is too coarse"});
                    push(bisect(f, x0, xm, f0, refine_iters));
                    push(bisect(f, xm, x1, fm, refine_iters));
                } else if (fm == 0.0) {
                    push(xm);
                }
            }
        }
    }
    return out;
}

SampledPath1D::SampledPath1D(std::vector<double> xs, std::vector<double> values,
                             std::vector<double> derivs)
    : xs_(std::move(xs)), values_(std::move(values)), derivs_(std::move(derivs)) {
    if (xs_.size() < 2 || xs_.size() != values_.size() || xs_.size() != derivs_.size())
        throw DimensionError("SampledPath1D: need matching xs, values, derivatives");
}

SampledPath1D SampledPath1D::from_sample(const FieldSample& sample) {
    if (sample.derivatives.size() < 2)
        throw DimensionError("SampledPath1D: sample must carry value and first derivative");
    const int slots = static_cast<int>(sample.derivatives.size());
    int value_slot = -1, deriv_slot = -1;
    for (int s = 0; s < slots; ++s) {
        if (sample.derivatives[s].order() == 0) value_slot = s;
        if (sample.derivatives[s].order() == 1) deriv_slot = s;
    }
    if (value_slot < 0 || deriv_slot < 0)
        throw DimensionError("SampledPath1D: sample must carry value and first derivative");
    std::vector<double> xs, vals, ders;
    const int sites = static_cast<int>(sample.grid.size());
    for (int i = 0; i < sites; ++i) {
        xs.push_back(sample.grid[i][0]);
        vals.push_back(sample.stacked[i * slots + value_slot]);
        ders.push_back(sample.stacked[i * slots + deriv_slot]);
    }
    return SampledPath1D(std::move(xs), std::move(vals), std::move(ders));
}

namespace {

int locate(const std::vector<double>& xs, double x) {
    if (x <= xs.front()) return 0;
    if (x >= xs.back()) return static_cast<int>(xs.size()) - 2;
    const int i = static_cast<int>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin()) - 1;
    return std::min(i, static_cast<int>(xs.size()) - 2);
}

}  // namespace

double SampledPath1D::operator()(double x) const {
    const int i = locate(xs_, x);
    const double h = xs_[i + 1] - xs_[i];
    const double t = (x - xs_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * values_[i] + (t3 - 2 * t2 + t) * h * derivs_[i] +
           (-2 * t3 + 3 * t2) * values_[i + 1] + (t3 - t2) * h * derivs_[i + 1];
}

double SampledPath1D::deriv(double x) const {
    const int i = locate(xs_, x);
    const double h = xs_[i + 1] - xs_[i];
    const double t = (x - xs_[i]) / h;
    const double t2 = t * t;
    return ((6 * t2 - 6 * t) * values_[i] + (3 * t2 - 4 * t + 1) * h * derivs_[i] +
            (-6 * t2 + 6 * t) * values_[i + 1] + (3 * t2 - 2 * t) * h * derivs_[i + 1]) /
           h;
}

double SampledPath1D::sup_abs() const {
    double s = 0.0;
    for (double v : values_) s = std::max(s, std::abs(v));
    return s;
}

ZeroSet1D find_zeros_1d(const SampledPath1D& path, int refine_iters) {
    return find_zeros_1d([&path](double x) { return path(x); },
                         [&path](double x) { return path.deriv(x); }, path.a(), path.b(),
                         path.cells(), refine_iters);
}

Field2D bilinear_field(const Box& box, int nx, int ny, const std::vector<double>& values,
                       const std::vector<double>& dx, const std::vector<double>& dy) {
    if (static_cast<int>(values.size()) != nx * ny || values.size() != dx.size() ||
        values.size() != dy.size())
        throw DimensionError("bilinear_field: grid data size mismatch");
    auto interp = [box, nx, ny](const std::vector<double>& data, const Eigen::Vector2d& q) {
        const double gx = (q[0] - box.lo[0]) / (box.hi[0] - box.lo[0]) * (nx - 1);
        const double gy = (q[1] - box.lo[1]) / (box.hi[1] - box.lo[1]) * (ny - 1);
        const int i = std::clamp(static_cast<int>(gx), 0, nx - 2);
        const int j = std::clamp(static_cast<int>(gy), 0, ny - 2);
        const double u = gx - i, v = gy - j;
        auto at = [&](int a, int b) { return data[a * ny + b]; };
        return (1 - u) * (1 - v) * at(i, j) + u * (1 - v) * at(i + 1, j) +
               (1 - u) * v * at(i, j + 1) + u * v * at(i + 1, j + 1);
    };
    Field2D f;
    f.value = [interp, values](const Eigen::Vector2d& q) { return interp(values, q); };
    f.gradient = [interp, dx, dy](const Eigen::Vector2d& q) {
        return Eigen::Vector2d(interp(dx, q), interp(dy, q));
    };
    return f;
}

namespace {

/// Topological degree of (f1, f2) along a cell boundary, from the winding
/// of the angle sampled densely along the edges.
int boundary_degree(const Field2D& f1, const Field2D& f2, double x0, double x1, double y0,
                    double y1, int steps_per_edge = 64) {
    std::vector<Eigen::Vector2d> loop;
    for (int e = 0; e < 4; ++e) {
        for (int s = 0; s < steps_per_edge; ++s) {
            const double t = static_cast<double>(s) / steps_per_edge;
            double x, y;
            switch (e) {
                case 0: x = x0 + t * (x1 - x0); y = y0; break;
                case 1: x = x1; y = y0 + t * (y1 - y0); break;
                case 2: x = x1 - t * (x1 - x0); y = y1; break;
                default: x = x0; y = y1 - t * (y1 - y0); break;
            }
            loop.emplace_back(x, y);
        }
    }
    double winding = 0.0;
    double prev = std::atan2(f2.value(loop.back()), f1.value(loop.back()));
    for (const auto& q : loop) {
        const double ang = std::atan2(f2.value(q), f1.value(q));
        double d = ang - prev;
        while (d > std::numbers::pi) d -= 2 * std::numbers::pi;
        while (d < -std::numbers::pi) d += 2 * std::numbers::pi;
        winding += d;
        prev = ang;
    }
    return static_cast<int>(std::lround(winding / (2 * std::numbers::pi)));
}

}  // namespace

ZeroPoints2D find_zeros_2d_points(const Field2D& f1, const Field2D& f2, const Box& box,
                                  int grid_cells, int newton_iters) {
    if (box.dim() != 2) throw DimensionError("find_zeros_2d_points: box must be planar");
    ZeroPoints2D out;
    const int m = grid_cells;
    const double hx = box.side(0) / m, hy = box.side(1) / m;

    Eigen::MatrixXd v1(m + 1, m + 1), v2(m + 1, m + 1);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) {
            const Eigen::Vector2d q(box.lo[0] + i * hx, box.lo[1] + j * hy);
            v1(i, j) = f1.value(q);
            v2(i, j) = f2.value(q);
        }

    auto mixed = [](double a, double b, double c, double d) {
        const double mn = std::min(std::min(a, b), std::min(c, d));
        const double mx = std::max(std::max(a, b), std::max(c, d));
        return mn <= 0.0 && mx >= 0.0;
    };

    const double dedup = 0.5 * std::min(hx, hy);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (!mixed(v1(i, j), v1(i + 1, j), v1(i, j + 1), v1(i + 1, j + 1))) continue;
            if (!mixed(v2(i, j), v2(i + 1, j), v2(i, j + 1), v2(i + 1, j + 1))) continue;
            const double x0 = box.lo[0] + i * hx, y0 = box.lo[1] + j * hy;

            Eigen::Vector2d q(x0 + 0.5 * hx, y0 + 0.5 * hy);
            bool converged = false;
            for (int it = 0; it < newton_iters; ++it) {
                const Eigen::Vector2d fv(f1.value(q), f2.value(q));
                Eigen::Matrix2d jac;
                jac.row(0) = f1.gradient(q).transpose();
                jac.row(1) = f2.gradient(q).transpose();
                if (std::abs(jac.determinant()) < 1e-14) break;
                const Eigen::Vector2d step = jac.partialPivLu().solve(fv);
                q -= step;
                // Keep the iterate near its cell; a wandering Newton is a miss.
                if (q[0] < x0 - hx || q[0] > x0 + 2 * hx || q[1] < y0 - hy || q[1] > y0 + 2 * hy)
                    break;
                if (fv.norm() < 1e-13 && step.norm() < 1e-12) {
                    converged = true;
                    break;
                }
            }
            // A converged root is a root wherever it landed (boundary zeros
            // show up from several cells); dedupe globally and keep the
            // half-open window convention.
            const bool in_box = q[0] >= box.lo[0] - 1e-12 && q[0] < box.hi[0] - 1e-12 &&
                                q[1] >= box.lo[1] - 1e-12 && q[1] < box.hi[1] - 1e-12;
            if (converged && in_box) {
                bool duplicate = false;
                for (const auto& z : out.points)
                    if ((z - q).norm() < dedup) duplicate = true;
                if (!duplicate) out.points.push_back(q);
            } else if (!converged) {
                const int deg =
                    std::abs(boundary_degree(f1, f2, x0, x0 + hx, y0, y0 + hy));
                if (deg > 0) {
                    ++out.flagged_cells;
                    out.warnings.push_back({WarningCode::resolution,
                                            "Newton did not settle in a cell with boundary degree " +
                                                std::to_string(deg) + "; counted by degree"});
                    for (int rep = 0; rep < deg; ++rep)
                        out.points.emplace_back(x0 + 0.5 * hx, y0 + 0.5 * hy);
                }
            }
        }
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
                  return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
              });
    return out;
}

}  // namespace mjet
