#pragma once

#include <stdexcept>
#include <string>

namespace mjet {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Inconsistent dimensions, orders or argument counts.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// An evaluation matrix has numerical rank below the number of points,
/// i.e. the configuration is too close to the large diagonal for the
/// requested kernel extraction. Carries the observed rank.
class RankDeficientError : public Error {
public:
    RankDeficientError(const std::string& what, int observed_rank, int expected_rank)
        : Error(what), observed_rank(observed_rank), expected_rank(expected_rank) {}

    int observed_rank;
    int expected_rank;
};

/// The value block of a Gaussian conditioning problem is numerically
/// singular. Signals diagonal proximity or a degenerate field.
class DegenerateConditioningError : public Error {
public:
    DegenerateConditioningError(const std::string& what, double min_eigenvalue)
        : Error(what), min_eigenvalue(min_eigenvalue) {}

    double min_eigenvalue;
};

/// A covariance matrix stayed indefinite after the documented jitter.
class NotPositiveSemiDefiniteError : public Error {
public:
    NotPositiveSemiDefiniteError(const std::string& what, double min_eigenvalue)
        : Error(what), min_eigenvalue(min_eigenvalue) {}

    double min_eigenvalue;
};

/// Non-fatal diagnostics attached to results instead of thrown.
enum class WarningCode {
    resolution,     // grid too coarse for reliable sign-change detection
    integrability,  // measured diagonal exponent at or below -n
};

struct Warning {
    WarningCode code;
    std::string message;
};

}  // namespace mjet
