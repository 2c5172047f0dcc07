#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mjet::validation {

/// Outcome of one acceptance criterion. `observed` is the headline number
/// the criterion is judged on and `bound` the pinned threshold; `details`
/// holds key=value pairs for the report.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double observed = 0.0;
    double bound = 0.0;
    std::string details;
    double seconds = 0.0;
};

struct Options {
    std::uint64_t seed = 20250809;
    int threads = 1;
};

/// Runs the full validation suite (criteria 1-12) and returns one result
/// per criterion, in order. Every tolerance is pinned in code.
std::vector<CriterionResult> run_all(const Options& opts);

/// Single criterion by id (1-12), for selective reruns.
CriterionResult run_one(int id, const Options& opts);

/// One line per criterion: "criterion <id> PASS|FAIL <name> observed=... bound=..."
std::string format_line(const CriterionResult& r);

}  // namespace mjet::validation
