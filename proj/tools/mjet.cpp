// Command line front end: experiment configs in, CSV/JSON reports out.
// Every command is deterministic given (--config, --seed); Monte Carlo
// sub-streams are derived per sample index, so --threads never changes
// any output byte.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "config_io.hpp"
#include "csv.hpp"
#include "json.hpp"
#include "mjet/divided_difference.hpp"
#include "mjet/empirical_moments.hpp"
#include "mjet/errors.hpp"
#include "mjet/eval_map.hpp"
#include "mjet/field_sampler.hpp"
#include "mjet/jet_covariance.hpp"
#include "mjet/kac_rice.hpp"
#include "mjet/kergin.hpp"
#include "mjet/moment_assembly.hpp"
#include "mjet/multijet.hpp"
#include "mjet/rng.hpp"
#include "mjet/validation.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using mjet::cli::canonical_dump;
using mjet::cli::check_keys;
using mjet::cli::ConfigError;
using mjet::cli::CsvWriter;
using mjet::cli::fnv1a;
using mjet::cli::hex64;
using mjet::cli::num17;
using mjet::cli::parse_box;
using mjet::cli::parse_function;
using mjet::cli::parse_kernel;
using mjet::cli::parse_points;
using mjet::cli::parse_vector;
using nlohmann::json;

struct GlobalOpts {
    std::string config_path;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    int threads = 1;
    long long trials = -1;
    long long samples = -1;
    bool override_caps = false;
};

struct RunContext {
    json config;
    std::uint64_t config_hash = 0;
    GlobalOpts opts;
    std::map<std::string, std::uint64_t> output_digests;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void write(const std::string& name, const std::string& bytes) {
        namespace fs = std::filesystem;
        fs::create_directories(opts.out_dir);
        const std::string path = (fs::path(opts.out_dir) / name).string();
        output_digests[name] = mjet::cli::write_file(path, bytes);
        std::printf("wrote %s\n", path.c_str());
    }

    void write_manifest(const std::string& command) {
        json manifest;
        manifest["tool_version"] = kVersion;
        manifest["command"] = command;
        manifest["config_hash"] = hex64(config_hash);
        manifest["seed"] = opts.seed;
        manifest["wall_time_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
        json outputs = json::object();
        for (const auto& [name, digest] : output_digests) outputs[name] = hex64(digest);
        manifest["outputs"] = outputs;
        namespace fs = std::filesystem;
        fs::create_directories(opts.out_dir);
        std::ofstream os(fs::path(opts.out_dir) / "manifest.json");
        os << manifest.dump(2) << "\n";
    }
};

RunContext load_context(const GlobalOpts& opts, const std::string& command) {
    RunContext ctx;
    ctx.opts = opts;
    if (!opts.config_path.empty()) {
        std::ifstream is(opts.config_path);
        if (!is) throw ConfigError("cannot open config file: " + opts.config_path);
        is >> ctx.config;
    } else {
        ctx.config = json::object();
    }
    ctx.config_hash = fnv1a(command + "\n" + canonical_dump(ctx.config));
    return ctx;
}

long long cap_value(long long requested, long long cap, const char* what, bool override_caps) {
    if (requested <= cap || override_caps) return requested;
    throw ConfigError(std::string(what) + " = " + std::to_string(requested) +
                      " exceeds the desk-scale cap " + std::to_string(cap) +
                      " (pass --override-caps to lift)");
}

std::string alpha_str(const mjet::MultiIndex& a) {
    std::string s;
    for (int i = 0; i < a.dim(); ++i) {
        if (i) s += ' ';
        s += std::to_string(a[i]);
    }
    return s;
}

// ---------------------------------------------------------------- divdiff
int cmd_divdiff(RunContext& ctx) {
    check_keys(ctx.config, {"function", "points"}, "divdiff config");
    if (!ctx.config.contains("function") || !ctx.config.contains("points"))
        throw ConfigError("divdiff: config needs 'function' and 'points'");
    const mjet::FnOracle f = parse_function(ctx.config["function"]);
    const auto points = parse_points(ctx.config["points"], "divdiff.points");
    if (points[0].size() != f.n) throw ConfigError("divdiff: point dimension != function dimension");

    const mjet::SymForm dd = mjet::divided_difference(f, points);
    CsvWriter csv({"alpha", "coefficient"});
    for (int i = 0; i < dd.size(); ++i)
        csv.add_row({alpha_str(dd.index_set()[i]), num17(dd.coeffs()[i])});
    ctx.write("divdiff.csv", csv.finish(ctx.config_hash, ctx.opts.seed, kVersion));
    std::printf("divided difference of order %d, %d coefficients\n", dd.order(), dd.size());
    return 0;
}

// ----------------------------------------------------------------- kergin
int cmd_kergin(RunContext& ctx) {
    check_keys(ctx.config, {"function", "points"}, "kergin config");
    if (!ctx.config.contains("function") || !ctx.config.contains("points"))
        throw ConfigError("kergin: config needs 'function' and 'points'");
    const mjet::FnOracle f = parse_function(ctx.config["function"]);
    const auto points = parse_points(ctx.config["points"], "kergin.points");
    const int p = static_cast<int>(points.size());
    cap_value(p, 6, "points", ctx.opts.override_caps);

    const mjet::Poly k = mjet::kergin(f, points);
    CsvWriter csv({"alpha", "coefficient"});
    for (int i = 0; i < k.basis().size(); ++i)
        csv.add_row({alpha_str(k.basis()[i]), num17(k.coeffs()[i])});
    ctx.write("kergin.csv", csv.finish(ctx.config_hash, ctx.opts.seed, kVersion));

    // interpolation-property residuals over every non-empty subset
    const mjet::FnOracle k_oracle = mjet::oracles::from_poly(k);
    CsvWriter res({"subset", "max_coeff_residual"});
    for (unsigned mask = 1; mask < (1u << p); ++mask) {
        std::vector<Eigen::VectorXd> sub;
        std::string label;
        for (int i = 0; i < p; ++i) {
            if (mask & (1u << i)) {
                sub.push_back(points[i]);
                if (!label.empty()) label += ' ';
                label += std::to_string(i);
            }
        }
        const mjet::SymForm lhs = mjet::divided_difference(f, sub);
        const mjet::SymForm rhs = mjet::divided_difference(k_oracle, sub);
        res.add_row({label, num17((lhs.coeffs() - rhs.coeffs()).cwiseAbs().maxCoeff())});
    }
    ctx.write("kergin_residuals.csv", res.finish(ctx.config_hash, ctx.opts.seed, kVersion));
    std::printf("Kergin polynomial of degree <= %d in %d variables\n", p - 1, f.n);
    return 0;
}

// ----------------------------------------------------------------- kernel
int cmd_kernel(RunContext& ctx) {
    check_keys(ctx.config, {"points", "partition", "cluster_tol"}, "kernel config");
    if (!ctx.config.contains("points")) throw ConfigError("kernel: config needs 'points'");
    const auto points = parse_points(ctx.config["points"], "kernel.points");
    double tol = -1.0;
    if (ctx.config.contains("cluster_tol")) tol = ctx.config["cluster_tol"].get<double>();
    const mjet::Configuration config = mjet::Configuration::from_points(points, tol);

    const mjet::Subspace g = mjet::ev_kernel(config);
    CsvWriter basis({"vector", "alpha", "coefficient"});
    const mjet::MonomialBasis mb(config.dim_space(), config.count() - 1);
    for (int c = 0; c < g.dim(); ++c)
        for (int r = 0; r < g.ambient_dim(); ++r)
            basis.add_row({std::to_string(c), alpha_str(mb[r]), num17(g.basis()(r, c))});
    ctx.write("kernel_basis.csv", basis.finish(ctx.config_hash, ctx.opts.seed, kVersion));

    if (ctx.config.contains("partition")) {
        std::vector<std::vector<int>> cells;
        for (const auto& cell : ctx.config["partition"]) {
            std::vector<int> c;
            for (const auto& i : cell) c.push_back(i.get<int>());
            cells.push_back(std::move(c));
        }
        const mjet::Partition partition(cells, config.count());
        const auto report = mjet::partition_intersection_check(config, partition);
        CsvWriter rep({"quantity", "value"});
        for (std::size_t i = 0; i < report.codims.size(); ++i)
            rep.add_row({"codim_cell_" + std::to_string(i), std::to_string(report.codims[i])});
        rep.add_row({"codim_sum", std::to_string(report.codim_sum)});
        rep.add_row({"transversality_gap", num17(report.transversality_gap)});
        rep.add_row({"intersection_dim", std::to_string(report.intersection_dim)});
        ctx.write("kernel_report.csv", rep.finish(ctx.config_hash, ctx.opts.seed, kVersion));
    }
    std::printf("kernel of codimension %d in dimension %d\n", g.codim(), g.ambient_dim());
    return 0;
}

// ------------------------------------------------------------------ limit
int cmd_limit(RunContext& ctx) {
    check_keys(ctx.config, {"path", "epsilons", "expected_span"}, "limit config");
    if (!ctx.config.contains("path") || !ctx.config.contains("epsilons"))
        throw ConfigError("limit: config needs 'path' and 'epsilons'");

    const auto& pj = ctx.config["path"];
    check_keys(pj, {"type", "u", "base"}, "limit.path");
    const std::string type = pj.at("type").get<std::string>();
    std::function<mjet::Configuration(double)> path;
    if (type == "spiral") {
        path = [](double eps) {
            Eigen::VectorXd a = Eigen::VectorXd::Zero(2);
            Eigen::VectorXd b(2);
            b << eps * std::cos(eps), eps * std::sin(eps);
            return mjet::Configuration::from_points({a, b});
        };
    } else if (type == "symmetric" || type == "radial") {
        if (!pj.contains("u")) throw ConfigError("limit.path: '" + type + "' needs 'u'");
        Eigen::VectorXd u = parse_vector(pj["u"], "limit.path.u");
        u.normalize();
        Eigen::VectorXd base = Eigen::VectorXd::Zero(u.size());
        if (pj.contains("base")) base = parse_vector(pj["base"], "limit.path.base");
        const bool symmetric = type == "symmetric";
        path = [u, base, symmetric](double eps) {
            Eigen::VectorXd a = symmetric ? (base - eps * u).eval() : base;
            Eigen::VectorXd b = base + eps * u;
            return mjet::Configuration::from_points({a, b});
        };
    } else {
        throw ConfigError("limit.path: unknown type '" + type + "'");
    }

    std::vector<double> epsilons;
    for (const auto& e : ctx.config["epsilons"]) epsilons.push_back(e.get<double>());

    std::optional<mjet::Subspace> expected;
    if (ctx.config.contains("expected_span")) {
        const auto span = parse_points(ctx.config["expected_span"], "limit.expected_span");
        Eigen::MatrixXd m(span[0].size(), span.size());
        for (std::size_t c = 0; c < span.size(); ++c) m.col(static_cast<int>(c)) = span[c];
        expected = mjet::Subspace::from_span(m);
    }

    const auto rows = mjet::limit_probe(path, epsilons, expected);
    CsvWriter csv({"eps", "angle_to_expected", "cauchy_increment"});
    for (const auto& row : rows) {
        csv.add_row({num17(row.eps),
                     row.angle_to_expected ? num17(*row.angle_to_expected) : std::string(""),
                     row.cauchy_increment ? num17(*row.cauchy_increment) : std::string("")});
    }
    ctx.write("limit.csv", csv.finish(ctx.config_hash, ctx.opts.seed, kVersion));

    if (!rows.empty()) {
        const int n = path(epsilons.front()).dim_space();
        const int p = path(epsilons.front()).count();
        const mjet::MonomialBasis mb(n, p - 1);
        CsvWriter bases({"eps", "vector", "alpha", "coefficient"});
        for (const auto& row : rows)
            for (int c = 0; c < row.kernel.dim(); ++c)
                for (int r = 0; r < row.kernel.ambient_dim(); ++r)
                    bases.add_row({num17(row.eps), std::to_string(c), alpha_str(mb[r]),
                                   num17(row.kernel.basis()(r, c))});
        ctx.write("limit_bases.csv", bases.finish(ctx.config_hash, ctx.opts.seed, kVersion));
    }
    std::printf("probed %zu configurations along path '%s'\n", rows.size(), type.c_str());
    return 0;
}

// ----------------------------------------------------------------- nondeg
int cmd_nondeg(RunContext& ctx) {
    check_keys(ctx.config, {"kernel", "order", "components"}, "nondeg config");
    if (!ctx.config.contains("kernel") || !ctx.config.contains("order"))
        throw ConfigError("nondeg: config needs 'kernel' and 'order'");
    const mjet::CovKernel kernel = mjet::make_kernel(parse_kernel(ctx.config["kernel"]));
    const int order = ctx.config["order"].get<int>();
    const int components =
        ctx.config.contains("components") ? ctx.config["components"].get<int>() : 1;

    const auto report = mjet::nondegeneracy_check(kernel, order, components);
    CsvWriter csv({"quantity", "value"});
    csv.add_row({"min_eigenvalue", num17(report.min_eigenvalue)});
    csv.add_row({"certified", report.certified ? "true" : "false"});
    ctx.write("nondeg.csv", csv.finish(ctx.config_hash, ctx.opts.seed, kVersion));

    CsvWriter nv({"alpha", "component"});
    for (std::size_t i = 0; i < report.derivative_order.size(); ++i)
        nv.add_row({alpha_str(report.derivative_order[i]),
                    num17(report.null_vector[static_cast<int>(i)])});
    ctx.write("nondeg_null_vector.csv", nv.finish(ctx.config_hash, ctx.opts.seed, kVersion));
    std::printf("min eigenvalue %.6g -> %s\n", report.min_eigenvalue,
                report.certified ? "certified" : "not certified");
    return 0;
}

// -------------------------------------------------------------------- rho
int cmd_rho(RunContext& ctx) {
    check_keys(ctx.config, {"kernel", "components", "points", "samples"}, "rho config");
    if (!ctx.config.contains("kernel")) throw ConfigError("rho: config needs 'kernel'");
    const mjet::CovKernel kernel = mjet::make_kernel(parse_kernel(ctx.config["kernel"]));
    const int components =
        ctx.config.contains("components") ? ctx.config["components"].get<int>() : 1;

    mjet::McOptions mc;
    mc.samples = ctx.config.contains("samples") ? ctx.config["samples"].get<long long>() : 100000;
    if (ctx.opts.samples > 0) mc.samples = ctx.opts.samples;
    mc.samples = cap_value(mc.samples, 20000000, "samples", ctx.opts.override_caps);
    mc.seed = ctx.opts.seed;
    mc.threads = ctx.opts.threads;

    CsvWriter csv({"estimator", "p", "value", "std_error", "samples", "method"});
    if (ctx.config.contains("points")) {
        const auto points = parse_points(ctx.config["points"], "rho.points");
        const mjet::Configuration config = mjet::Configuration::from_points(points);
        const auto est = mjet::rho_p(kernel, components, config, mc);
        csv.add_row({"rho_p", std::to_string(points.size()), num17(est.value),
                     num17(est.std_error), std::to_string(est.samples), "monte_carlo"});
        std::printf("rho_%zu = %.8g +- %.3g\n", points.size(), est.value, est.std_error);
    } else {
        const auto est = mjet::rho1(kernel, components, mc);
        const bool closed = est.method == mjet::DensityEstimate::Method::closed_form;
        csv.add_row({"rho_1", "1", num17(est.value), num17(est.std_error),
                     std::to_string(est.samples), closed ? "closed_form" : "monte_carlo"});
        std::printf("rho_1 = %.8g%s\n", est.value, closed ? " (closed form)" : "");
    }
    ctx.write("rho.csv", csv.finish(ctx.config_hash, ctx.opts.seed, kVersion));
    return 0;
}

// ---------------------------------------------------------------- moments
int cmd_moments(RunContext& ctx) {
    check_keys(ctx.config, {"kernel", "box", "p_max", "trials", "samples"}, "moments config");
    if (!ctx.config.contains("kernel") || !ctx.config.contains("box"))
        throw ConfigError("moments: config needs 'kernel' and 'box'");
    const mjet::CovKernel kernel = mjet::make_kernel(parse_kernel(ctx.config["kernel"]));
    const mjet::Box box = parse_box(ctx.config["box"]);
    const int p_max = ctx.config.contains("p_max") ? ctx.config["p_max"].get<int>() : 2;

    long long trials = ctx.config.contains("trials") ? ctx.config["trials"].get<long long>() : 5000;
    if (ctx.opts.trials > 0) trials = ctx.opts.trials;
    trials = cap_value(trials, 200000, "trials", ctx.opts.override_caps);
    long long samples =
        ctx.config.contains("samples") ? ctx.config["samples"].get<long long>() : 100000;
    if (ctx.opts.samples > 0) samples = ctx.opts.samples;
    samples = cap_value(samples, 20000000, "samples", ctx.opts.override_caps);

    mjet::EmpiricalOptions eopts;
    eopts.threads = ctx.opts.threads;
    const mjet::MomentReport emp = mjet::empirical_moments(kernel, kernel.dim, box, p_max, trials,
                                                           ctx.opts.seed, eopts);

    mjet::FactorialIntegralOptions fopts;
    fopts.mc.samples = samples;
    fopts.mc.seed = mjet::derive_seed(ctx.opts.seed, 0xFACB);
    fopts.mc.threads = ctx.opts.threads;
    const auto f1 = mjet::factorial_moment_integral(kernel, kernel.dim, box, 1, fopts);
    std::optional<mjet::FactorialIntegralResult> f2;
    if (p_max >= 2 && kernel.dim == 1)
        f2 = mjet::factorial_moment_integral(kernel, kernel.dim, box, 2, fopts);

    CsvWriter csv({"statistic", "order", "value", "std_error", "verdict"});
    for (int p = 1; p <= p_max; ++p) {
        csv.add_row({"empirical_raw_moment", std::to_string(p), num17(emp.raw_moments[p - 1]),
                     num17(emp.raw_moment_se[p - 1]), ""});
        csv.add_row({"empirical_factorial_moment", std::to_string(p),
                     num17(emp.factorial_moments[p - 1]), num17(emp.factorial_moment_se[p - 1]),
                     ""});
    }
    auto verdict = [](double diff, double band) {
        return diff <= band ? std::string("within_3se") : std::string("outside_3se");
    };
    {
        const double diff = std::abs(emp.mean - f1.value);
        const double band = 3.0 * emp.raw_moment_se[0] + f1.error;
        csv.add_row({"kacrice_factorial_integral", "1", num17(f1.value), num17(f1.error),
                     verdict(diff, band)});
    }
    if (f2) {
        const double diff = std::abs(emp.factorial_moments[1] - f2->value);
        const double band = 3.0 * emp.factorial_moment_se[1] + f2->error;
        csv.add_row({"kacrice_factorial_integral", "2", num17(f2->value), num17(f2->error),
                     verdict(diff, band)});
        const auto assembled = mjet::moment_from_factorials(
            {{1, {f1.value, f1.mc_error}}, {2, {f2->value, f2->mc_error}}}, 2, true);
        const double adiff = std::abs(emp.raw_moments[1] - assembled.value);
        const double aband = 3.0 * std::hypot(emp.raw_moment_se[1], assembled.error) +
                             f2->quad_error + f2->collar_bound;
        csv.add_row({"kacrice_assembled_moment", "2", num17(assembled.value),
                     num17(assembled.error), verdict(adiff, aband)});
    }
    auto code_of = [](mjet::WarningCode c) {
        return c == mjet::WarningCode::resolution ? std::string("RESOLUTION_WARNING")
                                                  : std::string("INTEGRABILITY_WARNING");
    };
    for (const auto& w : emp.warnings)
        csv.add_row({"warning", code_of(w.code), w.message, "", ""});
    for (const auto& w : f1.warnings)
        csv.add_row({"warning", code_of(w.code), w.message, "", ""});
    if (f2)
        for (const auto& w : f2->warnings)
            csv.add_row({"warning", code_of(w.code), w.message, "", ""});
    ctx.write("moments.csv", csv.finish(ctx.config_hash, ctx.opts.seed, kVersion));
    std::printf("empirical mean %.6g over %lld trials\n", emp.mean, trials);
    return 0;
}

// --------------------------------------------------------------- simulate
int cmd_simulate(RunContext& ctx) {
    check_keys(ctx.config, {"kernel", "grid", "orders", "draws"}, "simulate config");
    if (!ctx.config.contains("kernel") || !ctx.config.contains("grid"))
        throw ConfigError("simulate: config needs 'kernel' and 'grid'");
    const mjet::CovKernel kernel = mjet::make_kernel(parse_kernel(ctx.config["kernel"]));

    std::vector<Eigen::VectorXd> grid;
    const auto& gj = ctx.config["grid"];
    check_keys(gj, {"a", "b", "count", "sites"}, "simulate.grid");
    if (gj.contains("sites")) {
        grid = parse_points(gj["sites"], "simulate.grid.sites");
    } else {
        if (kernel.dim != 1) throw ConfigError("simulate.grid: a/b/count grids are 1-D");
        grid = mjet::grid_1d(gj.at("a").get<double>(), gj.at("b").get<double>(),
                             gj.at("count").get<int>());
    }

    std::vector<mjet::MultiIndex> derivs;
    if (ctx.config.contains("orders")) {
        for (const auto& o : ctx.config["orders"]) {
            if (o.is_number_integer()) {
                if (kernel.dim != 1)
                    throw ConfigError("simulate.orders: scalar orders are 1-D; use exponent arrays");
                derivs.push_back(mjet::MultiIndex{{o.get<int>()}});
            } else {
                std::vector<int> e;
                for (const auto& c : o) e.push_back(c.get<int>());
                derivs.push_back(mjet::MultiIndex{e});
            }
        }
    } else {
        derivs.push_back(mjet::MultiIndex::zero(kernel.dim));
    }

    long long draws = ctx.config.contains("draws") ? ctx.config["draws"].get<long long>() : 1;
    if (ctx.opts.trials > 0) draws = ctx.opts.trials;
    draws = cap_value(draws, 10000, "draws", ctx.opts.override_caps);
    cap_value(static_cast<long long>(grid.size() * derivs.size()), 4000, "stacked dimensions",
              ctx.opts.override_caps);

    const mjet::FieldSampler sampler(kernel, grid, derivs, 1);
    std::vector<std::string> header{"draw", "site"};
    for (int c = 0; c < kernel.dim; ++c) header.push_back("x" + std::to_string(c + 1));
    for (const auto& d : derivs) header.push_back("d_" + alpha_str(d));
    CsvWriter csv(header);
    for (long long k = 0; k < draws; ++k) {
        const Eigen::VectorXd v = sampler.draw(ctx.opts.seed, static_cast<std::uint64_t>(k));
        for (std::size_t s = 0; s < grid.size(); ++s) {
            std::vector<std::string> row{std::to_string(k), std::to_string(s)};
            for (int c = 0; c < kernel.dim; ++c) row.push_back(num17(grid[s][c]));
            for (std::size_t d = 0; d < derivs.size(); ++d)
                row.push_back(num17(v[s * derivs.size() + d]));
            csv.add_row(std::move(row));
        }
    }
    ctx.write("simulate.csv", csv.finish(ctx.config_hash, ctx.opts.seed, kVersion));
    std::printf("%lld draw(s) on %zu sites, %zu derivative slot(s)\n", draws, grid.size(),
                derivs.size());
    return 0;
}

// --------------------------------------------------------------- validate
int cmd_validate(RunContext& ctx) {
    check_keys(ctx.config, {}, "validate config");
    mjet::validation::Options vopts;
    vopts.seed = ctx.opts.seed != 0 ? ctx.opts.seed : 20250809;
    vopts.threads = ctx.opts.threads;

    const auto results = mjet::validation::run_all(vopts);
    bool all_passed = true;
    CsvWriter csv({"id", "name", "passed", "observed", "bound", "details"});
    json jr = json::array();
    for (const auto& r : results) {
        std::printf("%s\n", mjet::validation::format_line(r).c_str());
        all_passed = all_passed && r.passed;
        csv.add_row({std::to_string(r.id), r.name, r.passed ? "true" : "false", num17(r.observed),
                     num17(r.bound), r.details});
        jr.push_back({{"id", r.id},
                      {"name", r.name},
                      {"passed", r.passed},
                      {"observed", r.observed},
                      {"bound", r.bound},
                      {"details", r.details}});
    }
    ctx.write("validate.csv", csv.finish(ctx.config_hash, vopts.seed, kVersion));
    json summary;
    summary["seed"] = vopts.seed;
    summary["all_passed"] = all_passed;
    summary["criteria"] = jr;
    ctx.write("validate.json", summary.dump(2) + "\n");
    std::printf(all_passed ? "validation PASSED\n" : "validation FAILED\n");
    return all_passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multijet numerics: Kergin interpolation, evaluation-map kernels and "
                 "Kac-Rice statistics of Gaussian fields"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--config", opts.config_path, "JSON experiment config");
    app.add_option("--seed", opts.seed, "root seed (all sub-streams derive from it)");
    app.add_option("--out", opts.out_dir, "output directory")->capture_default_str();
    app.add_option("--threads", opts.threads, "worker threads (never changes results)")
        ->capture_default_str();
    app.add_option("--trials", opts.trials, "override trial count");
    app.add_option("--samples", opts.samples, "override Monte Carlo sample count");
    app.add_flag("--override-caps", opts.override_caps, "lift desk-scale input caps");

    const std::vector<std::pair<std::string, int (*)(RunContext&)>> commands = {
        {"divdiff", cmd_divdiff},   {"kergin", cmd_kergin},     {"kernel", cmd_kernel},
        {"limit", cmd_limit},       {"nondeg", cmd_nondeg},     {"rho", cmd_rho},
        {"moments", cmd_moments},   {"simulate", cmd_simulate}, {"validate", cmd_validate},
    };
    for (const auto& [name, fn] : commands) app.add_subcommand(name)->fallthrough();

    CLI11_PARSE(app, argc, argv);

    const std::string chosen = app.get_subcommands().front()->get_name();
    try {
        RunContext ctx = load_context(opts, chosen);
        int rc = 1;
        for (const auto& [name, fn] : commands)
            if (name == chosen) rc = fn(ctx);
        ctx.write_manifest(chosen);
        return rc;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 3;
    } catch (const mjet::RankDeficientError& e) {
        std::fprintf(stderr, "numerical degeneracy: %s\n", e.what());
        return 4;
    } catch (const mjet::DegenerateConditioningError& e) {
        std::fprintf(stderr, "numerical degeneracy: %s\n", e.what());
        return 4;
    } catch (const mjet::NotPositiveSemiDefiniteError& e) {
        std::fprintf(stderr, "numerical degeneracy: %s\n", e.what());
        return 4;
    } catch (const mjet::DimensionError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
