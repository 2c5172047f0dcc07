#include "mjet/kergin.hpp"

#include <string>

#include "mjet/errors.hpp"

namespace mjet {

Poly kergin(const FnOracle& f, const std::vector<Eigen::VectorXd>& points,
            const DividedDiffOptions& opts) {
    if (points.empty()) throw DimensionError("kergin: empty point list");
    const int p = static_cast<int>(points.size());
    const int n = f.n;
    if (f.smoothness < p - 1)
        throw DimensionError("kergin: oracle smoothness " + std::to_string(f.smoothness) +
                             " below p-1 = " + std::to_string(p - 1));

    Poly acc(n, p - 1);
    for (int k = 1; k <= p; ++k) {
        std::vector<Eigen::VectorXd> head(points.begin(), points.begin() + k);
        SymForm dd = divided_difference(f, head, opts);
        std::vector<std::vector<Poly>> args;
        args.reserve(k - 1);
        for (int j = 0; j < k - 1; ++j) args.push_back(affine_argument(points[j]));
        acc += dd.apply_poly(args).with_degree_bound(p - 1);
    }
    return acc;
}

Poly kergin(const Poly& p, const std::vector<Eigen::VectorXd>& points) {
    return kergin(oracles::from_poly(p), points);
}

Poly newton_reconstruct(const std::vector<SymForm>& forms,
                        const std::vector<Eigen::VectorXd>& anchors) {
    if (forms.empty()) throw DimensionError("newton_reconstruct: no forms");
    const int p = static_cast<int>(forms.size());
    const int n = forms[0].dim_space();
    if (static_cast<int>(anchors.size()) < p - 1)
        throw DimensionError("newton_reconstruct: need p-1 anchor points");
    for (int j = 0; j < p; ++j)
        if (forms[j].order() != j)
            throw DimensionError("newton_reconstruct: form " + std::to_string(j) +
                                 " has order " + std::to_string(forms[j].order()));

    Poly acc(n, p - 1);
    for (int j = 0; j < p; ++j) {
        std::vector<std::vector<Poly>> args;
        args.reserve(j);
        for (int i = 0; i < j; ++i) args.push_back(affine_argument(anchors[i]));
        acc += forms[j].apply_poly(args).with_degree_bound(p - 1);
    }
    return acc;
}

Eigen::MatrixXd kergin_map_matrix(const std::vector<Eigen::VectorXd>& points, int source_degree) {
    if (points.empty()) throw DimensionError("kergin_map_matrix: empty point list");
    const int n = static_cast<int>(points[0].size());
    const int q = static_cast<int>(points.size());
    const MonomialBasis source(n, source_degree);
    const auto target_size = MonomialBasis::dimension(n, q - 1);
    Eigen::MatrixXd m(target_size, source.size());
    for (int col = 0; col < source.size(); ++col) {
        Poly image = kergin(Poly::monomial(n, source[col]), points);
        m.col(col) = image.coeffs();
    }
    return m;
}

}  // namespace mjet
