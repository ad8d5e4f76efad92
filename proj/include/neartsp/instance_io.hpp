#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "neartsp/error.hpp"
#include "neartsp/graph.hpp"

namespace neartsp {

// Instance text format:
//   line 1:        n
//   next n-1 lines: row i of the strict upper triangle, w(i,i+1) ... w(i,n-1)
// Blank lines are skipped and '#' starts a comment running to end of line.

namespace detail {

inline std::vector<Weight> parse_row(std::string_view line, std::size_t line_no) {
  std::vector<Weight> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    Weight value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j)
      fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad integer '" +
                                      std::string(line.substr(i, j - i)) + "'");
    if (value < 0) fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": negative weight");
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace detail

inline WeightedGraph read_instance(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_n = false;
  std::size_t row = 0;
  std::vector<Weight> upper;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto values = detail::parse_row(line, line_no);
    if (values.empty()) continue;
    if (!have_n) {
      if (values.size() != 1 || values[0] < 1)
        fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected vertex count n >= 1");
      n = static_cast<std::size_t>(values[0]);
      have_n = true;
      upper.reserve(n * (n - 1) / 2);
      continue;
    }
    if (row + 1 >= n) fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": too many rows");
    if (values.size() != n - 1 - row)
      fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": row " + std::to_string(row) + " needs " +
                                      std::to_string(n - 1 - row) + " weights, got " + std::to_string(values.size()));
    upper.insert(upper.end(), values.begin(), values.end());
    ++row;
  }
  if (!have_n) fail(ErrorKind::ParseError, "empty instance");
  if (row + 1 < n) fail(ErrorKind::ParseError, "expected " + std::to_string(n - 1) + " rows, got " + std::to_string(row));
  try {
    return WeightedGraph::from_upper(n, upper);
  } catch (const Error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

inline WeightedGraph parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_instance(in);
}

inline void write_instance(std::ostream& out, const WeightedGraph& g) {
  const auto n = static_cast<Vertex>(g.size());
  out << n << '\n';
  for (Vertex i = 0; i + 1 < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (j > i + 1) out << ' ';
      out << g(i, j);
    }
    out << '\n';
  }
}

inline std::string format_instance(const WeightedGraph& g) {
  std::ostringstream out;
  write_instance(out, g);
  return out.str();
}

inline WeightedGraph load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  return read_instance(in);
}

inline void save_instance(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + path);
  write_instance(out, g);
}

}  // namespace neartsp
