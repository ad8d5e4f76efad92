#pragma once

#include <algorithm>
#include <vector>

#include "neartsp/error.hpp"
#include "neartsp/structures.hpp"

namespace neartsp {

struct EulerWalk {
  std::vector<Vertex> vertices;  // closed walk, first vertex not repeated at the end
  std::vector<std::size_t> edge_ids;  // edge_ids[i] joins vertices[i] and vertices[i+1 mod len]
};

/// Closed walk using every edge of `g` exactly once (Hierholzer), starting at
/// the smallest non-isolated vertex and trying edges in insertion order.
/// Throws NotEulerian on an odd degree or a disconnected edge set.
inline EulerWalk eulerian_tour(const MultiEdgeSet& g) {
  const std::size_t nv = g.vertex_bound();
  const auto& edges = g.edges();
  EulerWalk out;
  if (edges.empty()) return out;
  std::vector<std::vector<std::size_t>> adj(nv);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[static_cast<std::size_t>(edges[e].u)].push_back(e);
    adj[static_cast<std::size_t>(edges[e].v)].push_back(e);
  }
  Vertex start = -1;
  for (std::size_t v = 0; v < nv; ++v) {
    if (adj[v].size() % 2 != 0) fail(ErrorKind::NotEulerian, "vertex " + std::to_string(v) + " has odd degree");
    if (start < 0 && !adj[v].empty()) start = static_cast<Vertex>(v);
  }

  std::vector<char> used(edges.size(), 0);
  std::vector<std::size_t> cursor(nv, 0);
  // Stack of (vertex, edge used to reach it).
  std::vector<std::pair<Vertex, std::size_t>> stack{{start, edges.size()}};
  std::vector<std::pair<Vertex, std::size_t>> circuit;
  while (!stack.empty()) {
    auto [v, via] = stack.back();
    auto& cur = cursor[static_cast<std::size_t>(v)];
    const auto& list = adj[static_cast<std::size_t>(v)];
    while (cur < list.size() && used[list[cur]]) ++cur;
    if (cur == list.size()) {
      circuit.emplace_back(v, via);
      stack.pop_back();
      continue;
    }
    std::size_t e = list[cur];
    used[e] = 1;
    Vertex other = edges[e].u == v ? edges[e].v : edges[e].u;
    stack.emplace_back(other, e);
  }
  if (circuit.size() != edges.size() + 1) fail(ErrorKind::NotEulerian, "edge set is not connected");
  std::reverse(circuit.begin(), circuit.end());
  // circuit[0] is the start with no edge; circuit[i] was reached by circuit[i].second.
  for (std::size_t i = 0; i + 1 < circuit.size(); ++i) {
    out.vertices.push_back(circuit[i].first);
    out.edge_ids.push_back(circuit[i + 1].second);
  }
  return out;
}

}  // namespace neartsp
