#pragma once

#include <span>
#include <vector>

#include "neartsp/error.hpp"
#include "neartsp/euler.hpp"
#include "neartsp/graph.hpp"
#include "neartsp/matching.hpp"
#include "neartsp/spanning.hpp"
#include "neartsp/structures.hpp"

namespace neartsp {

/// Closed walk that may repeat vertices.
struct WalkWithRepeats {
  std::vector<Vertex> order;
  Weight total_weight = 0;
};

/// Keeps the first occurrence of every vertex. Each dropped occurrence is one
/// elementary shortcut and is checked not to increase the weight. Throws
/// IncompleteCover if the walk misses a vertex of `subset`.
inline Tour shortcut_metric(const WalkWithRepeats& walk, const WeightedGraph& g, std::span<const Vertex> subset) {
  std::vector<char> seen(g.size(), 0);
  std::vector<char> keep(walk.order.size(), 0);
  for (std::size_t i = 0; i < walk.order.size(); ++i) {
    auto v = static_cast<std::size_t>(walk.order[i]);
    if (!seen[v]) keep[i] = seen[v] = 1;
  }
  for (Vertex v : subset)
    if (!seen[static_cast<std::size_t>(v)]) fail(ErrorKind::IncompleteCover, "walk misses vertex " + std::to_string(v));
  auto order = shortcut_walk(walk.order, keep, g, [](Vertex, Vertex, Vertex) { return true; });
  ensure(is_hamiltonian_on(order, subset), "shortcut walk is not a tour of the subset");
  Tour t = make_tour(g, std::move(order));
  if (subset.size() == 2) t.total_weight = 2 * g(subset[0], subset[1]);
  ensure(t.total_weight <= walk.total_weight, "shortcut increased the walk weight");
  return t;
}

/// Christofides on the metric subgraph G[subset]: MST, minimum perfect
/// matching on its odd vertices, Euler tour, shortcut.
inline Tour christofides(const WeightedGraph& g, std::span<const Vertex> subset) {
  if (subset.empty()) fail(ErrorKind::InvalidArgument, "christofides on an empty vertex set");
  if (!is_metric_on(g, subset)) fail(ErrorKind::NotMetric, "subset contains a violating triangle");
  std::vector<Vertex> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() <= 3) {
    Tour t = make_tour(g, sorted);
    if (sorted.size() == 2) t.total_weight = 2 * g(sorted[0], sorted[1]);
    return canonical(std::move(t));
  }

  EdgeSet tree = mst(g, sorted);
  MultiEdgeSet multi;
  multi.add_all(tree.edges);
  std::vector<Vertex> odd;
  for (Vertex v : sorted)
    if (multi.degree(v) % 2 != 0) odd.push_back(v);
  Matching m = min_weight_perfect_matching(g, odd);
  for (auto [a, b] : m.pairs) multi.add(a, b, g(a, b));
  EulerWalk euler = eulerian_tour(multi);
  WalkWithRepeats walk{euler.vertices, multi.total_weight()};
  return canonical(shortcut_metric(walk, g, sorted));
}

inline Tour christofides(const WeightedGraph& g) {
  auto all = all_vertices(g.size());
  return christofides(g, all);
}

}  // namespace neartsp
