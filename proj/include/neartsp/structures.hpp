#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "neartsp/error.hpp"
#include "neartsp/graph.hpp"

namespace neartsp {

struct Edge {
  Vertex u;
  Vertex v;
  Weight w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b, Weight w) { return a < b ? Edge{a, b, w} : Edge{b, a, w}; }

inline bool edge_less(const Edge& a, const Edge& b) {
  return std::tie(a.u, a.v, a.w) < std::tie(b.u, b.v, b.w);
}

/// Simple edge set: no duplicate (u, v) pairs, u < v.
struct EdgeSet {
  std::vector<Edge> edges;
  Weight total_weight = 0;

  void add(Vertex a, Vertex b, Weight w) {
    edges.push_back(make_edge(a, b, w));
    total_weight += w;
  }
  std::size_t size() const noexcept { return edges.size(); }
};

/// Multigraph edge list with a degree table. Vertex ids may exceed n when
/// the caller introduces auxiliary copies.
class MultiEdgeSet {
 public:
  void add(Vertex a, Vertex b, Weight w) {
    edges_.push_back(make_edge(a, b, w));
    bump(a);
    bump(b);
    total_ += w;
  }
  void add(const Edge& e) { add(e.u, e.v, e.w); }
  template <class Range>
  void add_all(const Range& r) {
    for (const Edge& e : r) add(e);
  }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  Weight total_weight() const noexcept { return total_; }

  int degree(Vertex v) const {
    return static_cast<std::size_t>(v) < degree_.size() ? degree_[static_cast<std::size_t>(v)] : 0;
  }
  /// One past the largest vertex id touched.
  std::size_t vertex_bound() const noexcept { return degree_.size(); }

 private:
  void bump(Vertex v) {
    auto i = static_cast<std::size_t>(v);
    if (i >= degree_.size()) degree_.resize(i + 1, 0);
    ++degree_[i];
  }

  std::vector<Edge> edges_;
  std::vector<int> degree_;
  Weight total_ = 0;
};

struct Tree {
  std::vector<Vertex> vertices;  // sorted
  EdgeSet edges;
};

/// Vertex-disjoint trees covering a vertex universe. Trees are ordered by
/// their smallest vertex.
struct Forest {
  std::vector<Tree> trees;

  Weight total_weight() const {
    Weight s = 0;
    for (const auto& t : trees) s += t.edges.total_weight;
    return s;
  }
  std::size_t size() const noexcept { return trees.size(); }
};

struct Matching {
  std::vector<std::pair<Vertex, Vertex>> pairs;  // each pair first < second, list sorted
  Weight total_weight = 0;
};

/// Hamiltonian cycle over a vertex subset. For one vertex the weight is 0;
/// for two vertices u, v it is 2 w(u, v).
struct Tour {
  std::vector<Vertex> order;
  Weight total_weight = 0;

  friend bool operator==(const Tour&, const Tour&) = default;
};

template <class W>
Weight cycle_weight(std::span<const Vertex> order, const W& w) {
  Weight s = 0;
  for (std::size_t i = 0; i < order.size(); ++i) s += w(order[i], order[(i + 1) % order.size()]);
  return s;
}

inline Tour make_tour(const WeightedGraph& g, std::vector<Vertex> order) {
  Tour t{std::move(order), 0};
  t.total_weight = cycle_weight(t.order, g);
  return t;
}

/// Rotation starting at the smallest vertex, oriented so the second vertex is
/// smaller than the last. Two tours with the same edge set share this form.
inline std::vector<Vertex> canonical_order(std::vector<Vertex> order) {
  if (order.size() < 2) return order;
  auto it = std::min_element(order.begin(), order.end());
  std::rotate(order.begin(), it, order.end());
  if (order.size() > 2 && order[1] > order.back()) std::reverse(order.begin() + 1, order.end());
  return order;
}

inline Tour canonical(Tour t) {
  t.order = canonical_order(std::move(t.order));
  return t;
}

/// Weight first, then lexicographic canonical order.
inline bool tour_better(const Tour& a, const Tour& b) {
  if (a.total_weight != b.total_weight) return a.total_weight < b.total_weight;
  return a.order < b.order;
}

/// True when `order` visits every vertex of `subset` exactly once and nothing else.
inline bool is_hamiltonian_on(std::span<const Vertex> order, std::span<const Vertex> subset) {
  std::vector<Vertex> a(order.begin(), order.end()), b(subset.begin(), subset.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b && std::adjacent_find(a.begin(), a.end()) == a.end();
}

inline std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

/// Dense k x k cost matrix over local indices, for contracted or auxiliary
/// graphs that are not instances themselves.
struct CostMatrix {
  std::size_t k = 0;
  std::vector<Weight> c;

  CostMatrix() = default;
  explicit CostMatrix(std::size_t size) : k(size), c(size * size, 0) {}

  Weight operator()(std::size_t i, std::size_t j) const noexcept { return c[i * k + j]; }
  void set(std::size_t i, std::size_t j, Weight w) noexcept { c[i * k + j] = c[j * k + i] = w; }

  static CostMatrix of(const WeightedGraph& g, std::span<const Vertex> subset) {
    CostMatrix m(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i)
      for (std::size_t j = 0; j < subset.size(); ++j) m.c[i * m.k + j] = g(subset[i], subset[j]);
    return m;
  }
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> rank_;
};

/// Process-wide tally of elementary shortcut checks, so test harnesses can
/// report how many weight-safety assertions ran.
struct ShortcutStats {
  std::atomic<std::uint64_t> checks{0};
  std::atomic<std::uint64_t> failures{0};
};

inline ShortcutStats& shortcut_stats() {
  static ShortcutStats stats;
  return stats;
}

/// Asserts that replacing x-y-z by x-z does not increase weight.
template <class W>
void check_shortcut(const W& w, Vertex x, Vertex y, Vertex z) {
  shortcut_stats().checks.fetch_add(1, std::memory_order_relaxed);
  if (w(x, z) > w(x, y) + w(y, z)) {
    shortcut_stats().failures.fetch_add(1, std::memory_order_relaxed);
    fail(ErrorKind::InvariantViolation, "shortcut increased weight at " + std::to_string(x) + "-" +
                                            std::to_string(y) + "-" + std::to_string(z));
  }
}

/// Removes every position i of the cyclic walk with keep[i] == false, one
/// elementary shortcut at a time in walk order. Before each removal
/// `allowed(x, y, z)` must accept the triangle (else StructureViolated), and
/// the weight must not increase (else InvariantViolation).
template <class W, class Allowed>
std::vector<Vertex> shortcut_walk(const std::vector<Vertex>& walk, const std::vector<char>& keep, const W& w,
                                  const Allowed& allowed) {
  const std::size_t len = walk.size();
  std::size_t start = len;
  for (std::size_t i = 0; i < len; ++i)
    if (keep[i]) {
      start = i;
      break;
    }
  if (start == len) fail(ErrorKind::StructureViolated, "shortcut would remove every vertex");
  std::vector<Vertex> out;
  out.push_back(walk[start]);
  for (std::size_t s = 1; s < len; ++s) {
    std::size_t i = (start + s) % len;
    if (keep[i]) {
      out.push_back(walk[i]);
      continue;
    }
    Vertex x = out.back();
    Vertex y = walk[i];
    Vertex z = walk[(i + 1) % len];
    if (!allowed(x, y, z))
      fail(ErrorKind::StructureViolated, "unsafe shortcut at vertex " + std::to_string(y));
    check_shortcut(w, x, y, z);
  }
  return out;
}

}  // namespace neartsp
