#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "json.hpp"
#include "mjet/cov_kernel.hpp"
#include "mjet/fn_oracle.hpp"
#include "mjet/kac_rice.hpp"

namespace mjet::cli {

/// Input-side error: malformed config, unknown field, unknown registry id.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Rejects keys outside `allowed` (schema validation; unknown fields are
/// configuration typos, not extensions).
void check_keys(const nlohmann::json& obj, const std::vector<std::string>& allowed,
                const std::string& context);

Eigen::VectorXd parse_vector(const nlohmann::json& arr, const std::string& context);
std::vector<Eigen::VectorXd> parse_points(const nlohmann::json& arr, const std::string& context);
Box parse_box(const nlohmann::json& obj);

/// Kernel spec: {"name": ..., "n": ..., "parameters": {...}}.
KernelSpec parse_kernel(const nlohmann::json& obj);

/// Function registry (exact derivative oracles only):
///   {"id":"poly","n":...,"degree":...,"coeffs":[...]}   graded-lex coefficients
///   {"id":"sin","xi":[...],"phase":...}
///   {"id":"exp","a":[...]}
///   {"id":"gauss","n":...}
///   {"id":"mix","weights":[...],"terms":[...]}
FnOracle parse_function(const nlohmann::json& obj);

/// Canonical dump (sorted keys) used for config hashing.
std::string canonical_dump(const nlohmann::json& obj);

}  // namespace mjet::cli
