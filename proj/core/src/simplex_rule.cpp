#include "mjet/simplex_rule.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "mjet/errors.hpp"

namespace mjet {

SimplexRule SimplexRule::grundmann_moeller(int k, int min_exactness) {
    if (k < 0) throw DimensionError("SimplexRule: need k >= 0");
    if (k == 0) {
        // nu_0 is the unit point mass at the single barycentric point (1).
        SimplexRule rule(0, std::max(min_exactness, 1));
        rule.nodes_.push_back(Eigen::VectorXd::Ones(1));
        rule.weights_.push_back(1.0);
        return rule;
    }
    const int s = std::max(0, (min_exactness - 1 + 1) / 2);  // smallest s with 2s+1 >= min_exactness
    const int d = 2 * s + 1;
    SimplexRule rule(k, d);

    // Grundmann-Moller (1978): for the k-simplex with volume 1/k!,
    //   I_s(f) = sum_{i=0}^{s} w_i sum_{|beta| = s-i} f((2 beta + 1) / (d + k - 2i)),
    //   w_i = (-1)^i 2^{-2s} (d + k - 2i)^d / (i! (d + k - i)!).
    for (int i = 0; i <= s; ++i) {
        const double denom_shift = d + k - 2.0 * i;
        double w = std::pow(2.0, -2.0 * s) * std::pow(denom_shift, d);
        for (int j = 2; j <= i; ++j) w /= j;
        for (int j = 2; j <= d + k - i; ++j) w /= j;
        if (i % 2 == 1) w = -w;
        for (const auto& beta : MonomialBasis::exact_degree(k + 1, s - i)) {
            Eigen::VectorXd node(k + 1);
            for (int c = 0; c <= k; ++c) node[c] = (2.0 * beta[c] + 1.0) / denom_shift;
            rule.nodes_.push_back(node);
            rule.weights_.push_back(w);
        }
    }
    return rule;
}

double SimplexRule::integrate(const std::function<double(const Eigen::VectorXd&)>& fn) const {
    double acc = 0.0;
    for (int i = 0; i < size(); ++i) acc += weights_[i] * fn(nodes_[i]);
    return acc;
}

double SimplexRule::dirichlet_moment(const MultiIndex& gamma) {
    const int k = gamma.dim() - 1;
    double v = gamma.factorial();
    for (int j = 2; j <= k + gamma.order(); ++j) v /= j;
    return v;
}

namespace {

struct Piece {
    std::vector<Eigen::VectorXd> verts;  // k+1 barycentric vertices
    double volume_fraction;              // relative to sigma_k
    double coarse;
    double fine;

    double error() const { return std::abs(fine - coarse); }
};

/// Applies a rule on the sub-simplex spanned by `verts` (given in
/// barycentric coordinates of the parent). nu_k restricted to the piece is
/// the parent measure scaled by the piece's volume fraction.
double apply_on_piece(const SimplexRule& rule, const std::vector<Eigen::VectorXd>& verts,
                      double volume_fraction,
                      const std::function<double(const Eigen::VectorXd&)>& fn) {
    double acc = 0.0;
    const int k = rule.dim();
    Eigen::VectorXd point(verts[0].size());
    for (int i = 0; i < rule.size(); ++i) {
        const Eigen::VectorXd& bary = rule.nodes()[i];
        point.setZero();
        for (int v = 0; v <= k; ++v) point += bary[v] * verts[v];
        acc += rule.weights()[i] * fn(point);
    }
    return acc * volume_fraction;
}

void split_longest_edge(const Piece& p, Piece& a, Piece& b) {
    const int m = static_cast<int>(p.verts.size());
    int bi = 0, bj = 1;
    double best = -1.0;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            double len = (p.verts[i] - p.verts[j]).squaredNorm();
            if (len > best) {
                best = len;
                bi = i;
                bj = j;
            }
        }
    }
    Eigen::VectorXd mid = 0.5 * (p.verts[bi] + p.verts[bj]);
    a.verts = p.verts;
    a.verts[bi] = mid;
    b.verts = p.verts;
    b.verts[bj] = mid;
    a.volume_fraction = b.volume_fraction = 0.5 * p.volume_fraction;
}

}  // namespace

AdaptiveSimplexResult integrate_simplex_adaptive(
    int k, const std::function<double(const Eigen::VectorXd&)>& fn, double abs_tol,
    int max_pieces) {
    if (k == 0) return {fn(Eigen::VectorXd::Ones(1)), 0.0, 1};

    // High-order pair: for analytic integrands the degree-13 rule usually
    // settles the whole simplex in one shot, and the pair still drives the
    // bisection for rougher ones.
    const SimplexRule coarse = SimplexRule::grundmann_moeller(k, 9);
    const SimplexRule fine = SimplexRule::grundmann_moeller(k, 13);

    auto make_piece = [&](std::vector<Eigen::VectorXd> verts, double vol) {
        Piece p;
        p.verts = std::move(verts);
        p.volume_fraction = vol;
        p.coarse = apply_on_piece(coarse, p.verts, p.volume_fraction, fn);
        p.fine = apply_on_piece(fine, p.verts, p.volume_fraction, fn);
        return p;
    };

    std::vector<Eigen::VectorXd> root;
    for (int v = 0; v <= k; ++v) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(k + 1);
        e[v] = 1.0;
        root.push_back(e);
    }

    auto cmp = [](const Piece& x, const Piece& y) { return x.error() < y.error(); };
    std::priority_queue<Piece, std::vector<Piece>, decltype(cmp)> queue(cmp);
    queue.push(make_piece(std::move(root), 1.0));

    double total_error = queue.top().error();
    int pieces = 1;
    while (total_error > abs_tol && pieces < max_pieces) {
        Piece worst = queue.top();
        queue.pop();
        total_error -= worst.error();
        Piece a, b;
        split_longest_edge(worst, a, b);
        a = make_piece(std::move(a.verts), a.volume_fraction);
        b = make_piece(std::move(b.verts), b.volume_fraction);
        total_error += a.error() + b.error();
        queue.push(std::move(a));
        queue.push(std::move(b));
        ++pieces;
    }

    double value = 0.0, comp = 0.0;
    std::vector<Piece> rest;
    while (!queue.empty()) {
        double v = queue.top().fine;
        queue.pop();
        double t = value + v;
        if (std::abs(value) >= std::abs(v))
            comp += (value - t) + v;
        else
            comp += (v - t) + value;
        value = t;
    }
    return {value + comp, total_error, pieces};
}

}  // namespace mjet
