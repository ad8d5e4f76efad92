#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "neartsp/error.hpp"
#include "neartsp/graph.hpp"
#include "neartsp/structures.hpp"

namespace neartsp {

namespace detail {

struct LocalEdge {
  std::size_t i, j;
  Weight w;
};

// Kruskal over local indices. `cost(i, j)` returns nullopt for a forbidden
// pair. Ties are broken by edge id, i.e. lexicographic (i, j). Stops once
// `target_edges` edges are taken.
template <class Cost>
std::vector<LocalEdge> kruskal(std::size_t k, const Cost& cost, std::size_t target_edges) {
  std::vector<LocalEdge> candidates;
  candidates.reserve(k * (k - 1) / 2);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (std::optional<Weight> w = cost(i, j)) candidates.push_back({i, j, *w});
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const LocalEdge& a, const LocalEdge& b) { return a.w < b.w; });
  DisjointSets sets(k);
  std::vector<LocalEdge> taken;
  taken.reserve(target_edges);
  for (const auto& e : candidates) {
    if (taken.size() == target_edges) break;
    if (sets.unite(e.i, e.j)) taken.push_back(e);
  }
  return taken;
}

}  // namespace detail

/// Minimum spanning tree over `vertices`. `cost(u, v)` takes real vertex ids
/// and returns nullopt for forbidden pairs. Throws Disconnected when the
/// allowed pairs cannot span the set.
template <class Cost>
EdgeSet mst(std::span<const Vertex> vertices, const Cost& cost) {
  if (vertices.empty()) fail(ErrorKind::InvalidArgument, "mst of an empty vertex set");
  const std::size_t k = vertices.size();
  auto taken = detail::kruskal(k, [&](std::size_t i, std::size_t j) { return cost(vertices[i], vertices[j]); }, k - 1);
  if (taken.size() != k - 1) fail(ErrorKind::Disconnected, "forbidden edges disconnect the vertex set");
  EdgeSet out;
  for (const auto& e : taken) out.add(vertices[e.i], vertices[e.j], e.w);
  return out;
}

inline EdgeSet mst(const WeightedGraph& g, std::span<const Vertex> vertices) {
  return mst(vertices, [&](Vertex a, Vertex b) -> std::optional<Weight> { return g(a, b); });
}

/// Minimum-weight spanning forest of G[vertices] with exactly t trees: the
/// MST with its t-1 heaviest edges dropped (Kruskal halted after |V|-t edges).
inline Forest spanning_t_forest(const WeightedGraph& g, std::span<const Vertex> vertices, std::size_t t) {
  const std::size_t k = vertices.size();
  if (t < 1 || t > k) fail(ErrorKind::InvalidT, "t = " + std::to_string(t) + " outside [1, " + std::to_string(k) + "]");
  auto taken = detail::kruskal(
      k, [&](std::size_t i, std::size_t j) -> std::optional<Weight> { return g(vertices[i], vertices[j]); }, k - t);
  DisjointSets sets(k);
  for (const auto& e : taken) sets.unite(e.i, e.j);

  std::vector<std::size_t> slot(k, k);
  Forest forest;
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vertices[a] < vertices[b]; });
  for (std::size_t i : order) {
    std::size_t root = sets.find(i);
    if (slot[root] == k) {
      slot[root] = forest.trees.size();
      forest.trees.emplace_back();
    }
    forest.trees[slot[root]].vertices.push_back(vertices[i]);
  }
  for (const auto& e : taken) forest.trees[slot[sets.find(e.i)]].edges.add(vertices[e.i], vertices[e.j], e.w);
  ensure(forest.trees.size() == t, "spanning forest has the wrong number of trees");
  return forest;
}

}  // namespace neartsp
