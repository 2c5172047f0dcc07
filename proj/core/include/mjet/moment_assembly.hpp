#pragma once

#include <cstdint>
#include <map>
#include <utility>

namespace mjet {

/// Stirling number of the second kind: partitions of {1..p} with m cells.
std::int64_t stirling2(int p, int m);

struct MomentAssembly {
    double value = 0.0;
    double error = 0.0;
};

/// Assembles E[<nu, 1_B>^p] from factorial moment integrals, p <= 3.
///
/// Point-process case (r = n): the product measure decomposes over the
/// partitions of {1..p}, and a partition contributes the factorial integral
/// of order |cells|; over a common box that value depends only on the cell
/// count, so the sum collapses to sum_m S(p, m) F_m with Stirling weights.
/// Positive-codimension case (r < n): the diagonal is negligible and the
/// p-th moment equals the p-th factorial integral alone.
///
/// `factorials` maps the order m to (value, error) and must cover every
/// order appearing in the decomposition; a missing order throws.
MomentAssembly moment_from_factorials(const std::map<int, std::pair<double, double>>& factorials,
                                      int p, bool point_process);

}  // namespace mjet
