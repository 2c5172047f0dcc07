#include "config_io.hpp"

#include <algorithm>

namespace mjet::cli {

void check_keys(const nlohmann::json& obj, const std::vector<std::string>& allowed,
                const std::string& context) {
    if (!obj.is_object()) throw ConfigError(context + ": expected a JSON object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw ConfigError(context + ": unknown field '" + it.key() + "'");
    }
}

Eigen::VectorXd parse_vector(const nlohmann::json& arr, const std::string& context) {
    if (!arr.is_array() || arr.empty()) throw ConfigError(context + ": expected a number array");
    Eigen::VectorXd v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number()) throw ConfigError(context + ": expected numbers");
        v[static_cast<int>(i)] = arr[i].get<double>();
    }
    return v;
}

std::vector<Eigen::VectorXd> parse_points(const nlohmann::json& arr, const std::string& context) {
    if (!arr.is_array() || arr.empty()) throw ConfigError(context + ": expected an array of points");
    std::vector<Eigen::VectorXd> pts;
    for (const auto& p : arr) pts.push_back(parse_vector(p, context));
    for (const auto& p : pts)
        if (p.size() != pts[0].size()) throw ConfigError(context + ": mixed point dimensions");
    return pts;
}

Box parse_box(const nlohmann::json& obj) {
    check_keys(obj, {"lo", "hi"}, "box");
    if (!obj.contains("lo") || !obj.contains("hi")) throw ConfigError("box: needs lo and hi");
    Box box{parse_vector(obj["lo"], "box.lo"), parse_vector(obj["hi"], "box.hi")};
    if (box.lo.size() != box.hi.size()) throw ConfigError("box: lo/hi dimension mismatch");
    for (int i = 0; i < box.dim(); ++i)
        if (!(box.lo[i] < box.hi[i])) throw ConfigError("box: needs lo < hi per coordinate");
    return box;
}

KernelSpec parse_kernel(const nlohmann::json& obj) {
    check_keys(obj, {"name", "n", "parameters"}, "kernel");
    if (!obj.contains("name") || !obj.contains("n"))
        throw ConfigError("kernel: needs name and n");
    KernelSpec spec;
    spec.name = obj["name"].get<std::string>();
    spec.dim = obj["n"].get<int>();
    if (obj.contains("parameters")) {
        const auto& params = obj["parameters"];
        check_keys(params, {"max_jet", "amplitude", "weights", "frequencies"},
                   "kernel.parameters");
        if (params.contains("max_jet")) spec.max_jet = params["max_jet"].get<int>();
        if (params.contains("amplitude")) spec.amplitude = params["amplitude"].get<double>();
        if (params.contains("weights"))
            for (const auto& w : params["weights"]) spec.weights.push_back(w.get<double>());
        if (params.contains("frequencies"))
            spec.frequencies = parse_points(params["frequencies"], "kernel.parameters.frequencies");
    }
    if (spec.name != "bargmann_fock" && spec.name != "berry" && spec.name != "finite_atom")
        throw ConfigError("kernel: unknown kernel '" + spec.name + "'");
    return spec;
}

FnOracle parse_function(const nlohmann::json& obj) {
    if (!obj.is_object() || !obj.contains("id"))
        throw ConfigError("function: expected an object with an 'id'");
    const std::string id = obj["id"].get<std::string>();
    if (id == "poly") {
        check_keys(obj, {"id", "n", "degree", "coeffs"}, "function poly");
        const int n = obj.at("n").get<int>();
        const int degree = obj.at("degree").get<int>();
        const Eigen::VectorXd coeffs = parse_vector(obj.at("coeffs"), "function poly.coeffs");
        if (coeffs.size() != MonomialBasis::dimension(n, degree))
            throw ConfigError("function poly: coeffs must have length C(n+degree, n)");
        return oracles::from_poly(Poly(n, degree, coeffs));
    }
    if (id == "sin") {
        check_keys(obj, {"id", "xi", "phase"}, "function sin");
        const Eigen::VectorXd xi = parse_vector(obj.at("xi"), "function sin.xi");
        const double phase = obj.contains("phase") ? obj["phase"].get<double>() : 0.0;
        return oracles::sin_dot(xi, phase);
    }
    if (id == "exp") {
        check_keys(obj, {"id", "a"}, "function exp");
        return oracles::exp_dot(parse_vector(obj.at("a"), "function exp.a"));
    }
    if (id == "gauss") {
        check_keys(obj, {"id", "n"}, "function gauss");
        return oracles::gaussian(obj.at("n").get<int>());
    }
    if (id == "mix") {
        check_keys(obj, {"id", "weights", "terms"}, "function mix");
        std::vector<double> weights;
        for (const auto& w : obj.at("weights")) weights.push_back(w.get<double>());
        std::vector<FnOracle> terms;
        for (const auto& t : obj.at("terms")) terms.push_back(parse_function(t));
        return oracles::combine(weights, terms);
    }
    throw ConfigError("function: unknown id '" + id + "'");
}

std::string canonical_dump(const nlohmann::json& obj) {
    // nlohmann objects iterate in sorted key order, so dump() is canonical.
    return obj.dump();
}

}  // namespace mjet::cli
