#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "neartsp/error.hpp"
#include "neartsp/solve_report.hpp"

namespace neartsp {

/// weight / opt rounded half-up to 6 decimals, computed exactly.
inline std::string format_ratio(Weight weight, Weight opt) {
  if (opt <= 0) fail(ErrorKind::InvalidArgument, "ratio needs a positive optimum");
  const __int128 scaled = (static_cast<__int128>(weight) * 2000000 + opt) / (2 * static_cast<__int128>(opt));
  const auto whole = static_cast<long long>(scaled / 1000000);
  const auto frac = static_cast<long long>(scaled % 1000000);
  char buf[48];
  std::snprintf(buf, sizeof buf, "%lld.%06lld", whole, frac);
  return buf;
}

inline std::optional<std::string> ratio_text(const SolveReport& r) {
  if (!r.opt || *r.opt <= 0) return std::nullopt;
  return format_ratio(r.weight, *r.opt);
}

inline nlohmann::json to_json(const SolveReport& r) {
  nlohmann::json j;
  j["algorithm"] = r.algorithm;
  j["tour"] = r.tour.order;
  j["weight"] = r.weight;
  j["opt"] = r.opt ? nlohmann::json(*r.opt) : nlohmann::json(nullptr);
  auto ratio = ratio_text(r);
  j["ratio"] = ratio ? nlohmann::json(std::stod(*ratio)) : nlohmann::json(nullptr);
  j["p"] = r.p;
  j["q"] = r.q;
  j["guesses_evaluated"] = r.guesses_evaluated;
  j["guesses_skipped"] = r.guesses_skipped;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

inline SolveReport report_from_json(const nlohmann::json& j) {
  try {
    SolveReport r;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.tour.order = j.at("tour").get<std::vector<Vertex>>();
    r.weight = j.at("weight").get<Weight>();
    r.tour.total_weight = r.weight;
    if (!j.at("opt").is_null()) r.opt = j.at("opt").get<Weight>();
    r.p = j.at("p").get<std::int64_t>();
    r.q = j.at("q").get<std::int64_t>();
    r.guesses_evaluated = j.at("guesses_evaluated").get<std::uint64_t>();
    r.guesses_skipped = j.at("guesses_skipped").get<std::uint64_t>();
    r.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("report: ") + e.what());
  }
}

/// One line of a bench report.
struct BenchRow {
  std::string instance_id;
  std::size_t n = 0;
  std::int64_t p = -1;
  std::int64_t q = -1;
  std::string algorithm;
  Weight weight = 0;
  std::optional<Weight> opt;
  std::optional<std::string> ratio;
  std::uint64_t guesses_evaluated = 0;
  std::uint64_t guesses_skipped = 0;
  std::int64_t wall_time_ms = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

inline constexpr std::string_view kCsvHeader =
    "instance_id,n,p,q,algorithm,weight,opt,ratio,guesses_evaluated,guesses_skipped,wall_time_ms";

inline std::string csv_line(const BenchRow& r) {
  std::ostringstream s;
  s << r.instance_id << ',' << r.n << ',' << r.p << ',' << r.q << ',' << r.algorithm << ',' << r.weight << ',';
  if (r.opt) s << *r.opt;
  s << ',';
  if (r.ratio) s << *r.ratio;
  s << ',' << r.guesses_evaluated << ',' << r.guesses_skipped << ',' << r.wall_time_ms;
  return s.str();
}

inline std::string format_csv(const std::vector<BenchRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) out += csv_line(r) + '\n';
  return out;
}

namespace detail {

template <class T>
T csv_number(const std::string& field, std::size_t line) {
  std::istringstream s(field);
  T v{};
  if (!(s >> v) || s.peek() != std::char_traits<char>::eof())
    fail(ErrorKind::ParseError, "csv line " + std::to_string(line) + ": bad number '" + field + "'");
  return v;
}

}  // namespace detail

inline std::vector<BenchRow> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<BenchRow> rows;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (no == 1) {
      if (line != kCsvHeader) fail(ErrorKind::ParseError, "csv header mismatch");
      continue;
    }
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.emplace_back();
    if (f.size() != 11) fail(ErrorKind::ParseError, "csv line " + std::to_string(no) + ": expected 11 fields");
    BenchRow r;
    r.instance_id = f[0];
    r.n = detail::csv_number<std::size_t>(f[1], no);
    r.p = detail::csv_number<std::int64_t>(f[2], no);
    r.q = detail::csv_number<std::int64_t>(f[3], no);
    r.algorithm = f[4];
    r.weight = detail::csv_number<Weight>(f[5], no);
    if (!f[6].empty()) r.opt = detail::csv_number<Weight>(f[6], no);
    if (!f[7].empty()) r.ratio = f[7];
    r.guesses_evaluated = detail::csv_number<std::uint64_t>(f[8], no);
    r.guesses_skipped = detail::csv_number<std::uint64_t>(f[9], no);
    r.wall_time_ms = detail::csv_number<std::int64_t>(f[10], no);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace neartsp
