#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mjet::cli {

/// 64-bit FNV-1a over a byte string; the config-hash and file-digest
/// primitive used in manifests.
std::uint64_t fnv1a(const std::string& bytes);

std::string hex64(std::uint64_t v);

/// Formats a double with 17 significant digits, '.' decimal separator.
std::string num17(double v);

/// Tabular CSV builder: RFC 4180 quoting, a header row, and a trailing
/// manifest row carrying the config hash, seed and tool version.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    void add_numeric_row(const std::vector<double>& values);

    /// Serializes, appending "manifest,config_hash=...,seed=...,version=...".
    std::string finish(std::uint64_t config_hash, std::uint64_t seed,
                       const std::string& version) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Writes bytes to path (binary, no translation); returns the FNV-1a digest.
std::uint64_t write_file(const std::string& path, const std::string& bytes);

}  // namespace mjet::cli
