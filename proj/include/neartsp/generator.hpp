#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "neartsp/error.hpp"
#include "neartsp/graph.hpp"

namespace neartsp {

// Random streams are std::mt19937_64 seeded with the 64-bit seed. Bounded
// integers use rejection sampling on the raw 64-bit outputs rather than
// std::uniform_int_distribution, whose algorithm differs between standard
// libraries, so a seed gives the same instance everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return lo + static_cast<std::int64_t>(next());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
  }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 step, used to derive per-instance seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

enum class GeneratorKind { RandomMetric, PlantedP, PlantedQ };

inline std::string_view to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::RandomMetric: return "random-metric";
    case GeneratorKind::PlantedP: return "planted-p";
    case GeneratorKind::PlantedQ: return "planted-q";
  }
  return "?";
}

inline GeneratorKind parse_generator_kind(std::string_view s) {
  if (s == "random-metric") return GeneratorKind::RandomMetric;
  if (s == "planted-p") return GeneratorKind::PlantedP;
  if (s == "planted-q") return GeneratorKind::PlantedQ;
  fail(ErrorKind::InvalidArgument, "unknown generator kind '" + std::string(s) + "'");
}

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::RandomMetric;
  std::size_t n = 8;
  std::size_t target = 0;
  std::uint64_t seed = 1;
  Weight lo = 1;
  Weight hi = 100;
};

inline constexpr int kGeneratorRetries = 64;

namespace detail {

inline void check_spec(const GeneratorSpec& s) {
  if (s.n < 3) fail(ErrorKind::InvalidArgument, "generator needs n >= 3");
  if (s.target > s.n) fail(ErrorKind::InvalidArgument, "target exceeds n");
  if (s.lo < 1 || s.hi < s.lo) fail(ErrorKind::InvalidArgument, "weight range must satisfy 1 <= lo <= hi");
}

inline std::vector<Weight> metric_matrix(Rng& rng, std::size_t n, Weight lo, Weight hi) {
  std::vector<Weight> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m[i * n + j] = m[j * n + i] = rng.uniform(lo, hi);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i * n + j] = std::min(m[i * n + j], m[i * n + k] + m[k * n + j]);
  return m;
}

inline std::vector<Vertex> pick(Rng& rng, std::size_t n, std::size_t count) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
  rng.shuffle(v);
  v.resize(count);
  return v;
}

// Bad set exactly T: lift every edge leaving T by hi (keeps the matrix
// metric), then make t0 -> tj longer than the detour through t1 while
// keeping it no longer than any detour through a vertex outside T.
inline std::vector<Weight> planted_p_attempt(Rng& rng, const GeneratorSpec& s) {
  const std::size_t n = s.n;
  auto m = metric_matrix(rng, n, s.lo, s.hi);
  auto t = pick(rng, n, s.target);
  std::vector<char> in(n, 0);
  for (Vertex v : t) in[v] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !(in[i] && in[j])) m[i * n + j] += s.hi;
  const auto t0 = static_cast<std::size_t>(t[0]), t1 = static_cast<std::size_t>(t[1]);
  for (std::size_t k = 2; k < t.size(); ++k) {
    const auto tj = static_cast<std::size_t>(t[k]);
    const Weight low = m[t0 * n + t1] + m[t1 * n + tj] + 1;
    Weight high = std::numeric_limits<Weight>::max();
    for (std::size_t b = 0; b < n; ++b)
      if (!in[b]) high = std::min(high, m[t0 * n + b] + m[b * n + tj]);
    if (high == std::numeric_limits<Weight>::max()) high = low + rng.uniform(1, s.hi) - 1;
    if (high < low) continue;
    m[t0 * n + tj] = m[tj * n + t0] = rng.uniform(low, high);
  }
  return m;
}

// Minimum violating set of size exactly target: inflate one edge of each of
// `target` disjoint pairs past some detour.
inline std::vector<Weight> planted_q_attempt(Rng& rng, const GeneratorSpec& s) {
  const std::size_t n = s.n;
  auto m = metric_matrix(rng, n, s.lo, s.hi);
  auto v = pick(rng, n, 2 * s.target);
  for (std::size_t i = 0; i < s.target; ++i) {
    const auto a = static_cast<std::size_t>(v[2 * i]), b = static_cast<std::size_t>(v[2 * i + 1]);
    Weight shortest = std::numeric_limits<Weight>::max(), longest = 0;
    for (std::size_t z = 0; z < n; ++z) {
      if (z == a || z == b) continue;
      shortest = std::min(shortest, m[a * n + z] + m[z * n + b]);
      longest = std::max(longest, m[a * n + z] + m[z * n + b]);
    }
    m[a * n + b] = m[b * n + a] = rng.uniform(shortest + 1, longest + s.hi);
  }
  return m;
}

}  // namespace detail

/// Uniform weights in [lo, hi] closed under shortest paths.
inline WeightedGraph gen_random_metric(const GeneratorSpec& s) {
  detail::check_spec(s);
  Rng rng(s.seed);
  return WeightedGraph(s.n, detail::metric_matrix(rng, s.n, s.lo, s.hi));
}

/// Planted instance with exactly `target` bad vertices (planted-p) or a
/// minimum violating set of exactly `target` vertices (planted-q). Each
/// attempt is verified; GenerationFailed after the retry budget.
inline WeightedGraph gen_planted(const GeneratorSpec& s) {
  detail::check_spec(s);
  if (s.kind == GeneratorKind::RandomMetric) fail(ErrorKind::InvalidArgument, "gen_planted needs a planted kind");
  if (s.target == 0) return gen_random_metric(s);
  if (s.kind == GeneratorKind::PlantedP && s.target < 3)
    fail(ErrorKind::GenerationFailed, "a violating triangle has three vertices, so p is 0 or at least 3");
  if (s.kind == GeneratorKind::PlantedQ && 2 * s.target > s.n)
    fail(ErrorKind::GenerationFailed, "planted-q needs n >= 2 * target");
  Rng rng(s.seed);
  for (int attempt = 0; attempt < kGeneratorRetries; ++attempt) {
    if (s.kind == GeneratorKind::PlantedP) {
      WeightedGraph g(s.n, detail::planted_p_attempt(rng, s));
      if (bad_vertices_p(g).bad.size() == s.target) return g;
    } else {
      WeightedGraph g(s.n, detail::planted_q_attempt(rng, s));
      try {
        if (min_violating_set(g, s.target).bad.size() == s.target) return g;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
      }
    }
  }
  fail(ErrorKind::GenerationFailed, "no instance with the requested parameter after " +
                                        std::to_string(kGeneratorRetries) + " attempts");
}

inline WeightedGraph generate(const GeneratorSpec& s) {
  return s.kind == GeneratorKind::RandomMetric ? gen_random_metric(s) : gen_planted(s);
}

}  // namespace neartsp
