#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "neartsp/error.hpp"
#include "neartsp/graph.hpp"
#include "neartsp/structures.hpp"

namespace neartsp {

inline constexpr std::size_t kHeldKarpCap = 20;
inline constexpr std::size_t kBruteForceCap = 12;

/// Open Hamiltonian path with its weight.
struct Path {
  std::vector<Vertex> order;
  Weight total_weight = 0;
};

namespace detail {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

inline void check_cap(std::size_t k, std::size_t cap) {
  if (k > cap)
    fail(ErrorKind::CapExceeded, "exact DP on " + std::to_string(k) + " vertices exceeds cap " + std::to_string(cap));
}

// dp[mask][j]: cheapest path from `source` through exactly the nodes of mask
// (over the other k-1 nodes, re-indexed) ending at j. Returns the table.
struct HeldKarpTable {
  std::size_t m;  // number of non-source nodes
  std::vector<std::size_t> node;  // compact index -> local index
  std::vector<Weight> dp;

  Weight& at(std::size_t mask, std::size_t j) { return dp[mask * m + j]; }
  Weight at(std::size_t mask, std::size_t j) const { return dp[mask * m + j]; }
};

inline HeldKarpTable held_karp_table(const CostMatrix& c, std::size_t source) {
  HeldKarpTable t;
  for (std::size_t i = 0; i < c.k; ++i)
    if (i != source) t.node.push_back(i);
  t.m = t.node.size();
  const std::size_t full = std::size_t{1} << t.m;
  t.dp.assign(full * t.m, kInf);
  for (std::size_t j = 0; j < t.m; ++j) t.at(std::size_t{1} << j, j) = c(source, t.node[j]);
  for (std::size_t mask = 1; mask < full; ++mask) {
    for (std::size_t j = 0; j < t.m; ++j) {
      if (!(mask >> j & 1)) continue;
      const Weight base = t.at(mask, j);
      if (base >= kInf) continue;
      for (std::size_t l = 0; l < t.m; ++l) {
        if (mask >> l & 1) continue;
        Weight& slot = t.at(mask | (std::size_t{1} << l), l);
        slot = std::min(slot, base + c(t.node[j], t.node[l]));
      }
    }
  }
  return t;
}

// Walks the table back from (mask, last); at each step takes the smallest
// compact predecessor achieving the optimum. Returns local indices from the
// node after the source to `last`.
inline std::vector<std::size_t> held_karp_trace(const HeldKarpTable& t, const CostMatrix& c, std::size_t mask,
                                                std::size_t last) {
  std::vector<std::size_t> rev{last};
  while (mask != (std::size_t{1} << last)) {
    const std::size_t prev_mask = mask & ~(std::size_t{1} << last);
    std::size_t pick = t.m;
    for (std::size_t j = 0; j < t.m; ++j) {
      if (!(prev_mask >> j & 1)) continue;
      if (t.at(prev_mask, j) + c(t.node[j], t.node[last]) == t.at(mask, last)) {
        pick = j;
        break;
      }
    }
    ensure(pick < t.m, "held-karp trace lost the optimum");
    rev.push_back(pick);
    mask = prev_mask;
    last = pick;
  }
  std::vector<std::size_t> out;
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) out.push_back(t.node[*it]);
  return out;
}

}  // namespace detail

/// Optimal tour over local indices 0..k-1 of `c`. One node: weight 0; two
/// nodes: the doubled edge.
inline Path held_karp_tour_local(const CostMatrix& c, std::size_t cap = kHeldKarpCap) {
  const std::size_t k = c.k;
  if (k == 0) fail(ErrorKind::InvalidArgument, "tour over an empty vertex set");
  detail::check_cap(k, cap);
  if (k == 1) return {{0}, 0};
  if (k == 2) return {{0, 1}, 2 * c(0, 1)};
  auto t = detail::held_karp_table(c, 0);
  const std::size_t full = (std::size_t{1} << t.m) - 1;
  Weight best = detail::kInf;
  std::size_t last = 0;
  for (std::size_t j = 0; j < t.m; ++j) {
    Weight v = t.at(full, j) + c(t.node[j], 0);
    if (v < best) {
      best = v;
      last = j;
    }
  }
  Path p;
  p.order.push_back(0);
  for (std::size_t i : detail::held_karp_trace(t, c, full, last)) p.order.push_back(static_cast<Vertex>(i));
  p.total_weight = best;
  return p;
}

/// Optimal Hamiltonian path from local s to local t. For k = 1, s == t and
/// the path is the single node.
inline Path held_karp_path_local(const CostMatrix& c, std::size_t s, std::size_t t, std::size_t cap = kHeldKarpCap) {
  const std::size_t k = c.k;
  if (k == 0 || s >= k || t >= k) fail(ErrorKind::InvalidEndpoints, "path endpoints outside the vertex set");
  if (k == 1) return {{0}, 0};
  if (s == t) fail(ErrorKind::InvalidEndpoints, "path endpoints coincide");
  detail::check_cap(k, cap);
  auto tab = detail::held_karp_table(c, s);
  const std::size_t full = (std::size_t{1} << tab.m) - 1;
  const std::size_t tj = static_cast<std::size_t>(std::find(tab.node.begin(), tab.node.end(), t) - tab.node.begin());
  Path p;
  p.order.push_back(static_cast<Vertex>(s));
  for (std::size_t i : detail::held_karp_trace(tab, c, full, tj)) p.order.push_back(static_cast<Vertex>(i));
  p.total_weight = tab.at(full, tj);
  return p;
}

/// Minimum-weight tour on G[subset], in canonical order.
inline Tour held_karp_tour(const WeightedGraph& g, std::span<const Vertex> subset, std::size_t cap = kHeldKarpCap) {
  if (subset.empty()) fail(ErrorKind::InvalidArgument, "tour over an empty vertex set");
  detail::check_cap(subset.size(), cap);
  Path local = held_karp_tour_local(CostMatrix::of(g, subset), cap);
  Tour t;
  for (Vertex i : local.order) t.order.push_back(subset[static_cast<std::size_t>(i)]);
  t.total_weight = local.total_weight;
  return canonical(std::move(t));
}

inline Tour held_karp_tour(const WeightedGraph& g, std::size_t cap = kHeldKarpCap) {
  auto all = all_vertices(g.size());
  return held_karp_tour(g, all, cap);
}

/// Minimum-weight Hamiltonian path on G[subset] from s to t.
inline Path held_karp_path(const WeightedGraph& g, std::span<const Vertex> subset, Vertex s, Vertex t,
                           std::size_t cap = kHeldKarpCap) {
  auto pos = [&](Vertex v) -> std::size_t {
    auto it = std::find(subset.begin(), subset.end(), v);
    if (it == subset.end()) fail(ErrorKind::InvalidEndpoints, "endpoint " + std::to_string(v) + " not in subset");
    return static_cast<std::size_t>(it - subset.begin());
  };
  const std::size_t si = pos(s), ti = pos(t);
  if (si == ti && subset.size() != 1) fail(ErrorKind::InvalidEndpoints, "path endpoints coincide");
  detail::check_cap(subset.size(), cap);
  Path local = held_karp_path_local(CostMatrix::of(g, subset), si, ti, cap);
  Path out;
  for (Vertex i : local.order) out.order.push_back(subset[static_cast<std::size_t>(i)]);
  out.total_weight = local.total_weight;
  return out;
}

namespace detail {

struct BruteForce {
  const WeightedGraph& g;
  std::size_t n;
  std::vector<Weight> min_in;
  std::vector<Vertex> cur;
  std::vector<char> used;
  Weight rest_bound = 0;
  Weight best = kInf;
  std::vector<Vertex> best_order;

  void dfs(Weight partial) {
    if (cur.size() == n) {
      Weight total = partial + g(cur.back(), cur.front());
      if (total < best) {
        best = total;
        best_order = cur;
      }
      return;
    }
    for (std::size_t v = 1; v < n; ++v) {
      if (used[v]) continue;
      const Weight step = partial + g(cur.back(), static_cast<Vertex>(v));
      rest_bound -= min_in[v];
      if (step + rest_bound < best) {
        used[v] = 1;
        cur.push_back(static_cast<Vertex>(v));
        dfs(step);
        cur.pop_back();
        used[v] = 0;
      }
      rest_bound += min_in[v];
    }
  }
};

}  // namespace detail

/// Exact optimum by enumerating tours from vertex 0 in lexicographic order
/// (branch-and-bound on the cheapest entering edge of each unvisited
/// vertex). The first optimum found is the canonical lexicographic minimum.
inline Tour brute_force_tour(const WeightedGraph& g, std::size_t cap = kBruteForceCap) {
  const std::size_t n = g.size();
  if (n > cap) fail(ErrorKind::CapExceeded, "brute force on " + std::to_string(n) + " vertices exceeds cap");
  if (n == 1) return Tour{{0}, 0};
  if (n == 2) return Tour{{0, 1}, 2 * g(0, 1)};
  detail::BruteForce bf{g, n, std::vector<Weight>(n, detail::kInf), {0}, std::vector<char>(n, 0), 0, detail::kInf, {}};
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u)
      if (u != v) bf.min_in[v] = std::min(bf.min_in[v], g(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    bf.rest_bound += bf.min_in[v];
  }
  bf.used[0] = 1;
  bf.dfs(0);
  return Tour{bf.best_order, bf.best};
}

}  // namespace neartsp
