#include "csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace mjet::cli {

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string quote(const std::string& cell) {
    const bool needs = cell.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvWriter::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size())
        throw std::runtime_error("CsvWriter: row width does not match header");
    rows_.push_back(std::move(cells));
}

void CsvWriter::add_numeric_row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(num17(v));
    add_row(std::move(cells));
}

std::string CsvWriter::finish(std::uint64_t config_hash, std::uint64_t seed,
                              const std::string& version) const {
    std::string out;
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (i) out += ',';
        out += quote(header_[i]);
    }
    out += "\r\n";
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += quote(row[i]);
        }
        out += "\r\n";
    }
    out += "manifest,config_hash=" + hex64(config_hash) + ",seed=" + std::to_string(seed) +
           ",version=" + version + "\r\n";
    return out;
}

std::uint64_t write_file(const std::string& path, const std::string& bytes) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    os.close();
    return fnv1a(bytes);
}

}  // namespace mjet::cli
