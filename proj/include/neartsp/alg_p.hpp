#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "neartsp/chains.hpp"
#include "neartsp/error.hpp"
#include "neartsp/euler.hpp"
#include "neartsp/exact.hpp"
#include "neartsp/graph.hpp"
#include "neartsp/matching.hpp"
#include "neartsp/metric.hpp"
#include "neartsp/parallel.hpp"
#include "neartsp/solve_report.hpp"
#include "neartsp/spanning.hpp"
#include "neartsp/structures.hpp"

namespace neartsp {

namespace detail {

inline SolveReport finish(SolveReport r, const VertexPartition& part, const Stopwatch& clock) {
  r.weight = r.tour.total_weight;
  (part.kind == PartitionKind::ByP ? r.p : r.q) = static_cast<std::int64_t>(part.parameter());
  r.wall_time_ms = clock.elapsed_ms();
  return r;
}

inline Tour exact_tour(const WeightedGraph& g, std::size_t cap) { return held_karp_tour(g, cap); }

// Rotates a tour so it starts at v.
inline std::vector<Vertex> rotate_to(std::vector<Vertex> order, Vertex v) {
  auto it = std::find(order.begin(), order.end(), v);
  ensure(it != order.end(), "rotation vertex missing from tour");
  std::rotate(order.begin(), it, order.end());
  return order;
}

}  // namespace detail

/// Joins an exact tour of bad + {o} with a Christofides tour of the good
/// vertices at the good vertex o (the lowest good id). Small cases: no bad
/// vertices runs Christofides, fewer than three good vertices runs the exact DP.
inline SolveReport alg1(const WeightedGraph& g, const VertexPartition& part, const SolveOptions& opt = {}) {
  Stopwatch clock;
  SolveReport r;
  r.algorithm = "alg1";
  if (part.bad.empty()) {
    r.tour = christofides(g);
  } else if (part.good.size() < 3) {
    r.tour = detail::exact_tour(g, opt.held_karp_cap);
  } else {
    const Vertex o = part.good.front();
    std::vector<Vertex> with_o = part.bad;
    with_o.push_back(o);
    Tour tb = held_karp_tour(g, with_o, opt.held_karp_cap);
    Tour tg = christofides(g, part.good);
    auto b = detail::rotate_to(tb.order, o);
    auto q = detail::rotate_to(tg.order, o);
    // o u1 .. up | o v1 .. vm  ->  o u1 .. up v1 .. vm
    check_shortcut(g, b.back(), o, q[1]);
    std::vector<Vertex> order = b;
    order.insert(order.end(), q.begin() + 1, q.end());
    r.tour = canonical(make_tour(g, std::move(order)));
    ensure(r.tour.total_weight <= tb.total_weight + tg.total_weight, "splice increased weight");
    r.guesses_evaluated = 1;
  }
  ensure(is_hamiltonian_on(r.tour.order, all_vertices(g.size())), "alg1 output is not a tour");
  return detail::finish(std::move(r), part, clock);
}

/// Spanning tree F_A of V that contains every chain edge, where chain
/// endpoints and single-vertex chains connect only to good vertices and
/// inner chain vertices get no extra edges.
struct ConstrainedSpanningTree {
  EdgeSet edges;  // chain edges followed by the edges of F
  EdgeSet extra;  // F alone

  Weight total_weight() const noexcept { return edges.total_weight; }
};

/// Contracts every chain into one node priced at its cheaper endpoint toward
/// each good vertex, forbids chain-chain pairs, and maps the MST back.
inline ConstrainedSpanningTree build_cst(const WeightedGraph& g, const VertexPartition& part, const ChainSet& chains) {
  if (part.good.empty()) fail(ErrorKind::InvalidArgument, "constrained spanning tree needs a good vertex");
  const std::size_t k = chains.size();
  const std::size_t m = part.good.size();
  // Node i < k is chain i, node k + j is good vertex j.
  auto endpoint_to = [&](std::size_t c, Vertex v) {
    const Chain& ch = chains.chains[c];
    return g(ch.back(), v) < g(ch.front(), v) ? ch.back() : ch.front();
  };
  auto cost = [&](std::size_t i, std::size_t j) -> std::optional<Weight> {
    if (j < k) return std::nullopt;
    Vertex b = part.good[j - k];
    if (i < k) return g(endpoint_to(i, b), b);
    return g(part.good[i - k], b);
  };
  auto taken = detail::kruskal(k + m, cost, k + m - 1);
  ensure(taken.size() == k + m - 1, "contracted graph is disconnected");

  ConstrainedSpanningTree cst;
  for (const Edge& e : chains.edges(g)) cst.edges.add(e.u, e.v, e.w);
  for (const auto& e : taken) {
    Vertex b = part.good[e.j - k];
    Vertex a = e.i < k ? endpoint_to(e.i, b) : part.good[e.i - k];
    cst.extra.add(a, b, g(a, b));
    cst.edges.add(a, b, g(a, b));
  }

  // Tree shape and the degree rules.
  const std::size_t n = g.size();
  ensure(cst.edges.size() + 1 == n, "constrained tree has the wrong edge count");
  DisjointSets sets(n);
  for (const Edge& e : cst.edges.edges) ensure(sets.unite(e.u, e.v), "constrained tree has a cycle");
  auto bad = part.bad_mask(n);
  std::vector<int> degree(n, 0), bad_degree(n, 0);
  for (const Edge& e : cst.edges.edges) {
    ++degree[e.u];
    ++degree[e.v];
    if (bad[e.u]) bad_degree[e.v] += bad[e.v];
    if (bad[e.v]) bad_degree[e.u] += bad[e.u];
  }
  for (const Chain& c : chains.chains)
    for (std::size_t i = 0; i < c.size(); ++i) {
      int chain_degree = (i > 0) + (i + 1 < c.size());
      ensure(bad_degree[c[i]] == chain_degree, "chain vertex has extra bad neighbours");
      if (chain_degree == 2) ensure(degree[c[i]] == 2, "inner chain vertex has extra edges");
    }
  return cst;
}

/// Edges M_A that fix the parity of F_A, as edges of G. A matched pair of
/// endpoints of one chain stands for that whole chain, so the chain's edges
/// appear again; such chains are listed in `doubled`.
struct ParityMatching {
  std::vector<Edge> edges;
  Weight total_weight = 0;
  std::vector<std::size_t> doubled;  // indices into the chain set
  Matching auxiliary;                // the matching in the auxiliary graph
};

inline std::vector<Vertex> odd_vertices(std::size_t n, std::span<const Edge> edges) {
  std::vector<int> degree(n, 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<Vertex> odd;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] % 2) odd.push_back(static_cast<Vertex>(v));
  return odd;
}

inline ParityMatching parity_matching_alg2(const WeightedGraph& g, const ChainSet& chains,
                                           const ConstrainedSpanningTree& cst) {
  const std::size_t n = g.size();
  auto odd = odd_vertices(n, cst.edges.edges);
  // partner[v] = index of the chain whose other endpoint is v's pair, for
  // endpoints of chains with two or more vertices.
  std::vector<std::ptrdiff_t> chain_of(n, -1);
  for (std::size_t c = 0; c < chains.size(); ++c) {
    const Chain& ch = chains.chains[c];
    if (ch.size() >= 2) chain_of[ch.front()] = chain_of[ch.back()] = static_cast<std::ptrdiff_t>(c);
  }
  auto same_chain = [&](Vertex a, Vertex b) {
    return chain_of[a] >= 0 && chain_of[a] == chain_of[b];
  };
  auto cost = [&](Vertex a, Vertex b) {
    if (same_chain(a, b)) return ChainSet::chain_weight(g, chains.chains[static_cast<std::size_t>(chain_of[a])]);
    return g(a, b);
  };
  ParityMatching out;
  out.auxiliary = min_weight_perfect_matching(odd, cost);
  for (auto [a, b] : out.auxiliary.pairs) {
    if (same_chain(a, b)) {
      auto c = static_cast<std::size_t>(chain_of[a]);
      const Chain& ch = chains.chains[c];
      for (std::size_t i = 0; i + 1 < ch.size(); ++i) out.edges.push_back(make_edge(ch[i], ch[i + 1], g(ch[i], ch[i + 1])));
      out.doubled.push_back(c);
    } else {
      out.edges.push_back(make_edge(a, b, g(a, b)));
    }
  }
  for (const Edge& e : out.edges) out.total_weight += e.w;
  ensure(out.total_weight == out.auxiliary.total_weight, "mapped matching weight differs");
  std::sort(out.doubled.begin(), out.doubled.end());
  return out;
}

namespace detail {

// Shortcut is safe when the triangle holds a good vertex.
struct AnyGood {
  const std::vector<char>* bad;
  bool operator()(Vertex x, Vertex y, Vertex z) const { return !(*bad)[x] || !(*bad)[y] || !(*bad)[z]; }
};

}  // namespace detail

/// Turns F_A + M_A into a tour. (i) Every doubled chain a..a' loses its
/// second copy: with g a good neighbour of a (a the lower endpoint having at
/// least two good neighbours), the walk g a .. a' becomes g a'. (ii) Repeated
/// bad vertices keep the occurrence between two bad vertices, or else the
/// first, and drop the rest through a good neighbour. (iii) Repeated good
/// vertices keep their first occurrence. Throws StructureViolated when the
/// graph does not have the shape the argument relies on.
inline Tour shortcut_alg2(const WeightedGraph& g, const VertexPartition& part, const ChainSet& chains,
                          const ConstrainedSpanningTree& cst, const ParityMatching& pm) {
  const std::size_t n = g.size();
  const auto bad = part.bad_mask(n);
  const Weight budget = cst.total_weight() + pm.total_weight;

  // Multigraph as an edge list; removed entries are flagged.
  std::vector<Edge> edges = cst.edges.edges;
  edges.insert(edges.end(), pm.edges.begin(), pm.edges.end());
  std::vector<char> removed(edges.size(), 0);
  auto degree_good = [&](Vertex v) {
    std::vector<Vertex> out;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (removed[e]) continue;
      if (edges[e].u == v && !bad[edges[e].v]) out.push_back(edges[e].v);
      if (edges[e].v == v && !bad[edges[e].u]) out.push_back(edges[e].u);
    }
    return out;
  };
  auto remove_one = [&](Vertex a, Vertex b, std::size_t from) {
    Edge key = make_edge(a, b, g(a, b));
    for (std::size_t e = edges.size(); e-- > from;)
      if (!removed[e] && edges[e] == key) {
        removed[e] = 1;
        return;
      }
    fail(ErrorKind::StructureViolated, "edge to reroute is missing");
  };

  const std::size_t matching_from = cst.edges.size();
  std::vector<Edge> added;
  for (std::size_t c : pm.doubled) {
    const Chain& ch = chains.chains[c];
    Vertex a = ch.front(), a2 = ch.back();
    auto ga = degree_good(a), gb = degree_good(a2);
    std::vector<Vertex> path = ch;  // a .. a2
    std::vector<Vertex>* good = &ga;
    if (ga.size() < 2 || (gb.size() >= 2 && a2 < a)) {
      if (gb.size() < 2) fail(ErrorKind::StructureViolated, "no chain endpoint has two good neighbours");
      std::reverse(path.begin(), path.end());
      good = &gb;
    }
    const Vertex e = path.front(), e2 = path.back();
    const Vertex h = *std::min_element(good->begin(), good->end());
    // Walk h e .. e2: drop e, then each inner vertex, keeping h as the left end.
    for (std::size_t i = 0; i + 1 < path.size(); ++i) check_shortcut(g, h, path[i], path[i + 1]);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) remove_one(path[i], path[i + 1], matching_from);
    remove_one(h, e, 0);
    added.push_back(make_edge(h, e2, g(h, e2)));
  }
  MultiEdgeSet multi;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!removed[e]) multi.add(edges[e]);
  for (const Edge& e : added) multi.add(e);
  ensure(multi.total_weight() <= budget, "chain rerouting increased weight");

  // Every bad vertex now has at most two bad neighbours, counted with multiplicity.
  std::vector<int> bad_links(n, 0);
  for (const Edge& e : multi.edges())
    if (bad[e.u] && bad[e.v]) ++bad_links[e.u], ++bad_links[e.v];
  for (Vertex v : part.bad)
    if (bad_links[v] > 2) fail(ErrorKind::StructureViolated, "bad vertex with more than two bad neighbours");

  EulerWalk walk;
  try {
    walk = eulerian_tour(multi);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::NotEulerian) fail(ErrorKind::StructureViolated, err.what());
    throw;
  }
  const auto& w = walk.vertices;
  const std::size_t len = w.size();
  if (len < n) fail(ErrorKind::StructureViolated, "walk misses vertices");
  std::vector<char> keep(len, 0);
  std::vector<char> placed(n, 0);
  // (ii) bad vertices: the occurrence between two bad vertices wins.
  for (std::size_t i = 0; i < len; ++i) {
    Vertex v = w[i];
    if (!bad[v]) continue;
    if (bad[w[(i + len - 1) % len]] && bad[w[(i + 1) % len]]) {
      if (placed[v]) fail(ErrorKind::StructureViolated, "bad vertex enclosed by bad vertices twice");
      placed[v] = 1;
      keep[i] = 1;
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    Vertex v = w[i];
    if (!bad[v]) {
      keep[i] = 1;
    } else if (!placed[v]) {
      placed[v] = 1;
      keep[i] = 1;
    }
  }
  auto bad_once = shortcut_walk(w, keep, g, detail::AnyGood{&bad});
  // (iii) good vertices: first occurrence.
  std::vector<char> keep_good(bad_once.size(), 0);
  std::fill(placed.begin(), placed.end(), 0);
  for (std::size_t i = 0; i < bad_once.size(); ++i) {
    Vertex v = bad_once[i];
    if (!placed[v]) keep_good[i] = placed[v] = 1;
  }
  auto order = shortcut_walk(bad_once, keep_good, g, detail::AnyGood{&bad});
  if (!is_hamiltonian_on(order, all_vertices(n))) fail(ErrorKind::StructureViolated, "shortcut walk is not a tour");
  Tour t = canonical(make_tour(g, std::move(order)));
  ensure(t.total_weight <= budget, "tour heavier than tree plus matching");
  return t;
}

/// Full pipeline for one chain guess; nullopt when the guess is structurally
/// infeasible.
inline std::optional<Tour> alg2_guess(const WeightedGraph& g, const VertexPartition& part, const ChainSet& chains) {
  try {
    auto cst = build_cst(g, part, chains);
    auto pm = parity_matching_alg2(g, chains, cst);
    return shortcut_alg2(g, part, chains, cst, pm);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::StructureViolated) return std::nullopt;
    throw;
  }
}

/// Tries every chain guess and keeps the best tour (weight, then canonical
/// order). Same small-case handling as alg1.
inline SolveReport alg2(const WeightedGraph& g, const VertexPartition& part, const SolveOptions& opt = {}) {
  Stopwatch clock;
  SolveReport r;
  r.algorithm = "alg2";
  if (part.bad.empty()) {
    r.tour = christofides(g);
  } else if (part.good.size() < 3) {
    r.tour = detail::exact_tour(g, opt.held_karp_cap);
  } else {
    auto guesses = all_bad_chains(part.bad, opt.chain_cap_p);
    const std::size_t workers = std::max<std::size_t>(1, std::min(opt.threads, guesses.size()));
    std::vector<std::optional<Tour>> best(workers);
    std::vector<std::uint64_t> skipped(workers, 0);
    striped_for(guesses.size(), workers, [&](std::size_t t, std::size_t i) {
      auto tour = alg2_guess(g, part, guesses[i]);
      if (!tour) {
        ++skipped[t];
        return;
      }
      if (!best[t] || tour_better(*tour, *best[t])) best[t] = std::move(tour);
    });
    std::optional<Tour> overall;
    for (std::size_t t = 0; t < workers; ++t) {
      r.guesses_skipped += skipped[t];
      if (best[t] && (!overall || tour_better(*best[t], *overall))) overall = best[t];
    }
    r.guesses_evaluated = guesses.size();
    ensure(overall.has_value(), "every chain guess was infeasible");
    r.tour = *overall;
  }
  ensure(is_hamiltonian_on(r.tour.order, all_vertices(g.size())), "alg2 output is not a tour");
  return detail::finish(std::move(r), part, clock);
}

}  // namespace neartsp
