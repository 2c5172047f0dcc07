#include "mjet/moment_assembly.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "mjet/errors.hpp"

namespace mjet {

std::int64_t stirling2(int p, int m) {
    if (m < 0 || m > p) return 0;
    if (p == 0) return m == 0 ? 1 : 0;
    std::vector<std::vector<std::int64_t>> s(p + 1, std::vector<std::int64_t>(p + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return s[p][m];
}

MomentAssembly moment_from_factorials(const std::map<int, std::pair<double, double>>& factorials,
                                      int p, bool point_process) {
    if (p < 1 || p > 3) throw DimensionError("moment_from_factorials: p must be in {1, 2, 3}");
    auto fetch = [&](int m) -> const std::pair<double, double>& {
        auto it = factorials.find(m);
        if (it == factorials.end())
            throw DimensionError("moment_from_factorials: missing factorial input of order " +
                                 std::to_string(m));
        return it->second;
    };

    MomentAssembly out;
    if (!point_process) {
        const auto& [v, e] = fetch(p);
        out.value = v;
        out.error = e;
        return out;
    }
    double var = 0.0;
    for (int m = 1; m <= p; ++m) {
        const double w = static_cast<double>(stirling2(p, m));
        const auto& [v, e] = fetch(m);
        out.value += w * v;
        var += w * w * e * e;
    }
    out.error = std::sqrt(var);
    return out;
}

}  // namespace mjet
