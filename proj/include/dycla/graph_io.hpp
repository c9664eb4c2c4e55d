#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dycla/graph.hpp"

namespace dycla {

/// Error while reading a temporal edge-list file. `line()` is 1-based;
/// 0 means the failure concerns the file as a whole.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, std::size_t line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_single_spaces(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ' ') {
      tokens.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return tokens;  // an empty token signals a malformed separator
}

inline bool parse_u32(std::string_view token, std::uint32_t& out) {
  if (token.empty()) return false;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace detail

// Temporal edge-list text format:
//   N <n_vertices>
//   D <0|1>
//   T <t>          (t consecutive from 0)
//   E <u> <v>      (zero or more per snapshot)
// Lines starting with '#' are comments. Tokens are separated by single
// spaces and the file must end with a newline.

inline TemporalNetwork load_temporal_network(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();
  if (content.empty()) throw ParseError(path, 0, "empty file");
  if (content.back() != '\n')
    throw ParseError(path, 0, "missing trailing newline");

  std::uint32_t n_vertices = 0;
  bool directed = false;
  bool have_n = false;
  bool have_d = false;
  bool in_snapshot = false;
  std::uint32_t next_t = 0;
  std::vector<Edge> current_edges;
  std::set<Edge> current_seen;
  std::vector<GraphSnapshot> snapshots;

  auto close_snapshot = [&]() {
    if (in_snapshot) {
      snapshots.emplace_back(n_vertices, directed, std::move(current_edges));
      current_edges.clear();
      current_seen.clear();
    }
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    const std::size_t eol = content.find('\n', pos);
    const std::string_view line(content.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;

    const auto tokens = detail::split_single_spaces(line);
    for (const auto& tok : tokens)
      if (tok.empty())
        throw ParseError(path, line_no, "malformed line: empty token");

    const std::string_view tag = tokens.front();
    if (tag == "N") {
      if (have_n || tokens.size() != 2)
        throw ParseError(path, line_no, "malformed N line");
      if (!detail::parse_u32(tokens[1], n_vertices))
        throw ParseError(path, line_no, "malformed vertex count");
      have_n = true;
    } else if (tag == "D") {
      if (!have_n || have_d || tokens.size() != 2)
        throw ParseError(path, line_no, "malformed D line");
      if (tokens[1] == "0")
        directed = false;
      else if (tokens[1] == "1")
        directed = true;
      else
        throw ParseError(path, line_no, "directedness flag must be 0 or 1");
      have_d = true;
    } else if (tag == "T") {
      if (!have_d || tokens.size() != 2)
        throw ParseError(path, line_no, "malformed T line");
      std::uint32_t t = 0;
      if (!detail::parse_u32(tokens[1], t))
        throw ParseError(path, line_no, "malformed snapshot index");
      if (t != next_t)
        throw ParseError(path, line_no,
                         "snapshot indices must be consecutive from 0, expected " +
                             std::to_string(next_t));
      close_snapshot();
      in_snapshot = true;
      ++next_t;
    } else if (tag == "E") {
      if (!in_snapshot)
        throw ParseError(path, line_no, "edge line before any T line");
      if (tokens.size() != 3)
        throw ParseError(path, line_no, "malformed E line");
      Edge e;
      if (!detail::parse_u32(tokens[1], e.src) ||
          !detail::parse_u32(tokens[2], e.dst))
        throw ParseError(path, line_no, "malformed edge endpoint");
      if (e.src >= n_vertices || e.dst >= n_vertices)
        throw ParseError(path, line_no, "edge endpoint out of range [0, " +
                                            std::to_string(n_vertices) + ")");
      if (e.src == e.dst)
        throw ParseError(path, line_no, "self-loops are not allowed");
      Edge canonical = e;
      if (!directed && canonical.src > canonical.dst)
        std::swap(canonical.src, canonical.dst);
      if (!current_seen.insert(canonical).second)
        throw ParseError(path, line_no, "duplicate edge");
      current_edges.push_back(e);
    } else {
      throw ParseError(path, line_no, "unknown record type");
    }
  }
  close_snapshot();
  if (snapshots.empty()) throw ParseError(path, 0, "network has no snapshots");
  return TemporalNetwork(std::move(snapshots));
}

/// Writes the canonical form: edges sorted by (src, dst) within each
/// snapshot, so equal networks always serialize to identical bytes.
inline void save_temporal_network(const TemporalNetwork& net,
                                  const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open " + path + " for writing");
  out << "N " << net.n_vertices() << "\n";
  out << "D " << (net.directed() ? 1 : 0) << "\n";
  for (std::size_t t = 0; t < net.size(); ++t) {
    out << "T " << t << "\n";
    for (const Edge& e : net[t].edges())
      out << "E " << e.src << " " << e.dst << "\n";
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace dycla
