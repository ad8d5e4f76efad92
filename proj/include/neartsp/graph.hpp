#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "neartsp/error.hpp"

namespace neartsp {

using Vertex = int;
using Weight = std::int64_t;

// A triple {a, apex, c} with w(a, c) > w(a, apex) + w(apex, c).
struct TriangleViolation {
  std::array<Vertex, 3> triple;  // sorted ascending
  Vertex apex;

  // The two endpoints of the long side.
  std::array<Vertex, 2> long_side() const {
    std::array<Vertex, 2> out{};
    int k = 0;
    for (Vertex v : triple)
      if (v != apex) out[k++] = v;
    return out;
  }

  friend bool operator==(const TriangleViolation&, const TriangleViolation&) = default;
};

namespace detail {
struct ViolationCache {
  std::once_flag once;
  std::vector<TriangleViolation> list;
};
}  // namespace detail

/// Complete symmetric graph with non-negative integer weights, stored as a
/// dense n x n matrix. Immutable once built; copies share the cached
/// triangle scan.
class WeightedGraph {
 public:
  WeightedGraph() : WeightedGraph(1, std::vector<Weight>{0}) {}

  /// Builds from a full row-major n x n matrix. Throws InvalidInstance on an
  /// asymmetric matrix, a non-zero diagonal, a negative weight, or weights
  /// too large to sum over all n^2 entries.
  WeightedGraph(std::size_t n, std::vector<Weight> matrix)
      : n_(n), w_(std::move(matrix)), cache_(std::make_shared<detail::ViolationCache>()) {
    if (n_ == 0) fail(ErrorKind::InvalidInstance, "graph needs at least one vertex");
    if (w_.size() != n_ * n_) fail(ErrorKind::InvalidInstance, "matrix size does not match n");
    const Weight limit = std::numeric_limits<Weight>::max() / static_cast<Weight>(n_ * n_ + 1);
    for (std::size_t i = 0; i < n_; ++i) {
      if (w_[i * n_ + i] != 0) fail(ErrorKind::InvalidInstance, "non-zero diagonal entry");
      for (std::size_t j = 0; j < n_; ++j) {
        Weight x = w_[i * n_ + j];
        if (x < 0) fail(ErrorKind::InvalidInstance, "negative weight");
        if (x > limit) fail(ErrorKind::InvalidInstance, "weight too large");
        if (x != w_[j * n_ + i]) fail(ErrorKind::InvalidInstance, "asymmetric weights");
      }
    }
  }

  /// Builds from the strict upper triangle, row by row.
  static WeightedGraph from_upper(std::size_t n, std::span<const Weight> upper) {
    if (upper.size() != n * (n - 1) / 2) fail(ErrorKind::InvalidInstance, "upper triangle size mismatch");
    std::vector<Weight> m(n * n, 0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m[i * n + j] = m[j * n + i] = upper[k++];
    return WeightedGraph(n, std::move(m));
  }

  std::size_t size() const noexcept { return n_; }

  Weight operator()(Vertex i, Vertex j) const noexcept {
    return w_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
  }

  const std::vector<Weight>& matrix() const noexcept { return w_; }

  Weight max_weight() const noexcept { return *std::max_element(w_.begin(), w_.end()); }

  const std::vector<TriangleViolation>& violations() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

 private:
  std::size_t n_;
  std::vector<Weight> w_;
  std::shared_ptr<detail::ViolationCache> cache_;
};

namespace detail {

// Appends the violation of triple a < b < c, if any. At most one of the three
// inequalities can fail when weights are non-negative.
template <class W>
inline bool triple_violation(const W& w, Vertex a, Vertex b, Vertex c, TriangleViolation* out) {
  const Weight ab = w(a, b), bc = w(b, c), ac = w(a, c);
  Vertex apex = -1;
  if (ac > ab + bc) apex = b;
  else if (bc > ab + ac) apex = a;
  else if (ab > ac + bc) apex = c;
  if (apex < 0) return false;
  if (out) *out = TriangleViolation{{a, b, c}, apex};
  return true;
}

}  // namespace detail

inline const std::vector<TriangleViolation>& WeightedGraph::violations() const {
  std::call_once(cache_->once, [this] {
    auto& out = cache_->list;
    const auto n = static_cast<Vertex>(n_);
    TriangleViolation v{};
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        for (Vertex c = b + 1; c < n; ++c)
          if (detail::triple_violation(*this, a, b, c, &v)) out.push_back(v);
  });
  return cache_->list;
}

/// Every violating triple in lexicographic order of the sorted triple.
inline const std::vector<TriangleViolation>& violating_triangles(const WeightedGraph& g) {
  return g.violations();
}

inline bool is_metric(const WeightedGraph& g) { return g.violations().empty(); }

/// True when the subgraph induced by `subset` has no violating triangle.
inline bool is_metric_on(const WeightedGraph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (std::size_t k = j + 1; k < s.size(); ++k)
        if (detail::triple_violation(g, s[i], s[j], s[k], nullptr)) return false;
  return true;
}

enum class PartitionKind { ByP, ByQ };

/// Split of V into bad and good vertices. Both lists are sorted.
struct VertexPartition {
  std::vector<Vertex> bad;
  std::vector<Vertex> good;
  PartitionKind kind = PartitionKind::ByP;

  std::size_t parameter() const noexcept { return bad.size(); }

  std::vector<char> bad_mask(std::size_t n) const {
    std::vector<char> m(n, 0);
    for (Vertex v : bad) m[static_cast<std::size_t>(v)] = 1;
    return m;
  }
};

namespace detail {
inline VertexPartition make_partition(std::size_t n, const std::vector<char>& bad_mask, PartitionKind kind) {
  VertexPartition out;
  out.kind = kind;
  for (std::size_t v = 0; v < n; ++v)
    (bad_mask[v] ? out.bad : out.good).push_back(static_cast<Vertex>(v));
  return out;
}
}  // namespace detail

/// Bad vertices are exactly those appearing in some violating triangle.
inline VertexPartition bad_vertices_p(const WeightedGraph& g) {
  std::vector<char> mask(g.size(), 0);
  for (const auto& t : g.violations())
    for (Vertex v : t.triple) mask[static_cast<std::size_t>(v)] = 1;
  return detail::make_partition(g.size(), mask, PartitionKind::ByP);
}

namespace detail {

struct HittingSetSearch {
  const std::vector<TriangleViolation>& tris;
  std::vector<char> removed;
  std::vector<Vertex> chosen;
  std::optional<std::vector<Vertex>> best;

  void run(std::size_t depth_left) {
    const TriangleViolation* open = nullptr;
    for (const auto& t : tris) {
      if (!removed[t.triple[0]] && !removed[t.triple[1]] && !removed[t.triple[2]]) {
        open = &t;
        break;
      }
    }
    if (open == nullptr) {
      std::vector<Vertex> s = chosen;
      std::sort(s.begin(), s.end());
      if (!best || s < *best) best = std::move(s);
      return;
    }
    if (depth_left == 0) return;
    for (Vertex v : open->triple) {
      removed[v] = 1;
      chosen.push_back(v);
      run(depth_left - 1);
      chosen.pop_back();
      removed[v] = 0;
    }
  }
};

}  // namespace detail

/// Minimum violating set by bounded three-way branching on violating
/// triangles, deepening the size bound 0, 1, 2, ... so the first size with a
/// solution is the minimum. Among minimum sets the lexicographically smallest
/// sorted vertex list is returned. Throws BudgetExceeded if the minimum is
/// larger than `budget`.
inline VertexPartition min_violating_set(const WeightedGraph& g, std::optional<std::size_t> budget = std::nullopt) {
  const auto& tris = g.violations();
  const std::size_t limit = budget.value_or(g.size());
  detail::HittingSetSearch search{tris, std::vector<char>(g.size(), 0), {}, std::nullopt};
  for (std::size_t k = 0; k <= limit; ++k) {
    search.run(k);
    if (search.best) {
      std::vector<char> mask(g.size(), 0);
      for (Vertex v : *search.best) mask[v] = 1;
      return detail::make_partition(g.size(), mask, PartitionKind::ByQ);
    }
  }
  fail(ErrorKind::BudgetExceeded, "no violating set of size <= " + std::to_string(limit));
}

/// Subgraph induced by `keep` (in the given order), relabelled 0..k-1.
inline WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> keep) {
  const std::size_t k = keep.size();
  std::vector<Weight> m(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i * k + j] = g(keep[i], keep[j]);
  return WeightedGraph(k, std::move(m));
}

}  // namespace neartsp
