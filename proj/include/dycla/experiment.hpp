#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dycla/seed_set.hpp"

namespace dycla {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// One result row: what an algorithm selected on one snapshot and what it
/// cost. `interactions` counts learning/selection-time cascade evaluations
/// only; the reported spread estimate is excluded from it.
struct ExperimentRecord {
  std::uint32_t snapshot_t = 0;
  std::string algorithm;
  SeedSet seeds;
  double spread_mean = 0.0;
  double spread_stderr = 0.0;
  std::uint64_t interactions = 0;
  std::uint64_t wall_ms = 0;
};

inline constexpr std::string_view kResultsCsvHeader =
    "snapshot,algorithm,seeds,spread_mean,spread_stderr,interactions,wall_ms";

namespace detail {

inline std::string format_fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

/// Shortest decimal string that round-trips to the same double; keeps
/// manifests and derived defaults readable ("0.2", not 17 digits).
inline std::string format_shortest(double v) {
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  return buf;
}

inline std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == sep) {
      fields.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return fields;
}

}  // namespace detail

inline void write_results_csv(const std::string& path,
                              const std::vector<ExperimentRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << kResultsCsvHeader << "\n";
  for (const auto& rec : records) {
    out << rec.snapshot_t << ',' << rec.algorithm << ',' << rec.seeds.joined()
        << ',' << detail::format_fixed(rec.spread_mean) << ','
        << detail::format_fixed(rec.spread_stderr) << ',' << rec.interactions
        << ',' << rec.wall_ms << "\n";
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::vector<ExperimentRecord> read_results_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != kResultsCsvHeader)
    throw std::runtime_error(path + ": bad or missing results header");
  std::vector<ExperimentRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = detail::split(line, ',');
    if (fields.size() != 7)
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected 7 fields");
    ExperimentRecord rec;
    rec.snapshot_t = static_cast<std::uint32_t>(std::stoul(fields[0]));
    rec.algorithm = fields[1];
    std::vector<VertexId> seeds;
    if (!fields[2].empty())
      for (const auto& tok : detail::split(fields[2], ';'))
        seeds.push_back(static_cast<VertexId>(std::stoul(tok)));
    rec.seeds = SeedSet(std::move(seeds));
    rec.spread_mean = std::stod(fields[3]);
    rec.spread_stderr = std::stod(fields[4]);
    rec.interactions = std::stoull(fields[5]);
    rec.wall_ms = std::stoull(fields[6]);
    records.push_back(std::move(rec));
  }
  return records;
}

/// Flat key=value manifest, written in the given order.
inline void write_manifest(
    const std::string& path,
    const std::vector<std::pair<std::string, std::string>>& entries) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (const auto& [key, value] : entries) out << key << '=' << value << "\n";
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace dycla
