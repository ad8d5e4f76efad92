#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "neartsp/alg_p.hpp"
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

/// One anchor position of an ordered chain guess. A single anchor is the only
/// good vertex between two chains and touches y and z; a pair anchor touches y.
struct AnchorSlot {
  bool single = false;
  Vertex y = -1;
  Vertex z = -1;
  std::size_t gap = 0;  // index i of the gap b_i .. a_{i+1}
};

/// Slots in tour order: gap i contributes one single slot (f_i = 1) or the
/// pair slot next to b_i followed by the pair slot next to a_{i+1}.
inline std::vector<AnchorSlot> anchor_slots(const OrderedChainGuess& guess) {
  const std::size_t k = guess.size();
  std::vector<AnchorSlot> slots;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t next = (i + 1) % k;
    if (guess.anchor[i] == 1) {
      slots.push_back({true, guess.tail(i), guess.head(next), i});
    } else {
      slots.push_back({false, guess.tail(i), -1, i});
      slots.push_back({false, guess.head(next), -1, i});
    }
  }
  return slots;
}

struct LimbGuess {
  std::vector<AnchorSlot> slots;
  std::vector<std::size_t> tree_of;           // slot -> tree
  std::vector<Vertex> anchors;                // slot -> guessed anchor
  std::vector<std::vector<Vertex>> potential;  // tree -> V_F, sorted
  std::vector<Edge> limbs;
  Weight total_weight = 0;
};

inline Weight slot_cost(const WeightedGraph& g, const AnchorSlot& s, Vertex v) {
  return s.single ? g(v, s.y) + g(v, s.z) : g(v, s.y);
}

/// V_x: the min(2q, |V(F)|) vertices of `tree` cheapest for slot `s`, ties
/// by lowest id.
inline std::vector<Vertex> potential_vertices(const WeightedGraph& g, const AnchorSlot& s, const Tree& tree,
                                              std::size_t q) {
  std::vector<Vertex> v = tree.vertices;
  std::stable_sort(v.begin(), v.end(), [&](Vertex a, Vertex b) { return slot_cost(g, s, a) < slot_cost(g, s, b); });
  v.resize(std::min(2 * q, v.size()));
  return v;
}

/// V_F for every tree under a slot-to-tree assignment.
inline std::vector<std::vector<Vertex>> potential_sets(const WeightedGraph& g, std::span<const AnchorSlot> slots,
                                                       const Forest& forest, std::span<const std::size_t> tree_of,
                                                       std::size_t q) {
  std::vector<std::vector<Vertex>> out(forest.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    auto vx = potential_vertices(g, slots[s], forest.trees[tree_of[s]], q);
    out[tree_of[s]].insert(out[tree_of[s]].end(), vx.begin(), vx.end());
  }
  for (auto& v : out) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return out;
}

inline LimbGuess make_limb_guess(const WeightedGraph& g, std::vector<AnchorSlot> slots,
                                 std::vector<std::size_t> tree_of, std::vector<Vertex> anchors,
                                 std::vector<std::vector<Vertex>> potential) {
  LimbGuess lg{std::move(slots), std::move(tree_of), std::move(anchors), std::move(potential), {}, 0};
  for (std::size_t s = 0; s < lg.slots.size(); ++s) {
    const AnchorSlot& sl = lg.slots[s];
    const Vertex x = lg.anchors[s];
    lg.limbs.push_back(make_edge(x, sl.y, g(x, sl.y)));
    if (sl.single) lg.limbs.push_back(make_edge(x, sl.z, g(x, sl.z)));
  }
  for (const Edge& e : lg.limbs) lg.total_weight += e.w;
  return lg;
}

/// LIMB. For every assignment of slots to trees, and every choice of
/// pairwise distinct anchors with the anchor of slot s taken from V_{F_s},
/// emits the limb set. When `limit` is given, a partial choice whose limb
/// weight exceeds limit() is cut. Returns the number of cut branches.
inline std::uint64_t limb_guesses(const WeightedGraph& g, const VertexPartition& part, const OrderedChainGuess& guess,
                                  const Forest& forest, const std::function<void(const LimbGuess&)>& emit,
                                  const std::function<Weight()>& limit = {}) {
  const std::size_t q = part.bad.size();
  const auto slots = anchor_slots(guess);
  const std::size_t m = slots.size(), k = forest.size();
  if (k == 0) return 0;
  // cand[s][t] = V_x for slot s placed in tree t.
  std::vector<std::vector<std::vector<Vertex>>> cand(m, std::vector<std::vector<Vertex>>(k));
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < k; ++t) cand[s][t] = potential_vertices(g, slots[s], forest.trees[t], q);

  std::uint64_t cut = 0;
  std::vector<std::size_t> tree_of(m, 0);
  std::vector<char> used(g.size(), 0);
  std::vector<Vertex> anchors(m, -1);
  std::vector<std::vector<Vertex>> potential(k);

  std::function<void(std::size_t, Weight)> place = [&](std::size_t s, Weight partial) {
    if (limit && partial > limit()) {
      ++cut;
      return;
    }
    if (s == m) {
      emit(make_limb_guess(g, slots, tree_of, anchors, potential));
      return;
    }
    for (Vertex x : potential[tree_of[s]]) {
      if (used[x]) continue;
      used[x] = 1;
      anchors[s] = x;
      place(s + 1, partial + slot_cost(g, slots[s], x));
      used[x] = 0;
    }
  };

  while (true) {
    std::vector<std::size_t> load(k, 0);
    for (auto& p : potential) p.clear();
    for (std::size_t s = 0; s < m; ++s) {
      ++load[tree_of[s]];
      auto& p = potential[tree_of[s]];
      p.insert(p.end(), cand[s][tree_of[s]].begin(), cand[s][tree_of[s]].end());
    }
    bool room = true;
    for (std::size_t t = 0; t < k; ++t) {
      auto& p = potential[t];
      std::sort(p.begin(), p.end());
      p.erase(std::unique(p.begin(), p.end()), p.end());
      room = room && load[t] <= p.size();
    }
    if (room) place(0, 0);
    std::size_t i = 0;
    while (i < m && ++tree_of[i] == k) tree_of[i++] = 0;
    if (i == m) break;
  }
  return cut;
}

/// Trees contracted to single nodes: the cheapest edge between every pair of
/// trees, and the vertex pair realising it (first in sorted order on ties).
struct ContractedForest {
  CostMatrix w;
  std::vector<std::pair<Vertex, Vertex>> arg;  // k * k

  Edge edge(const WeightedGraph& g, std::size_t a, std::size_t b) const {
    auto [u, v] = arg[a * w.k + b];
    return make_edge(u, v, g(u, v));
  }
};

inline ContractedForest contract(const WeightedGraph& g, const Forest& forest) {
  const std::size_t k = forest.size();
  ContractedForest c{CostMatrix(k), std::vector<std::pair<Vertex, Vertex>>(k * k, {-1, -1})};
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      Weight best = std::numeric_limits<Weight>::max();
      std::pair<Vertex, Vertex> arg{-1, -1};
      for (Vertex u : forest.trees[a].vertices)
        for (Vertex v : forest.trees[b].vertices)
          if (g(u, v) < best) {
            best = g(u, v);
            arg = {u, v};
          }
      c.w.set(a, b, best);
      c.arg[a * k + b] = c.arg[b * k + a] = arg;
    }
  return c;
}

/// Good chains with at least two vertices, as (slot of x, slot of x').
inline std::vector<std::pair<std::size_t, std::size_t>> long_good_chains(const LimbGuess& lg) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t s = 0; s < lg.slots.size(); ++s)
    if (!lg.slots[s].single) {
      out.emplace_back(s, s + 1);
      ++s;
    }
  return out;
}

/// Trees whose guessed anchors are all single anchors and which hold at
/// least one vertex that is not a guessed anchor.
inline std::vector<std::size_t> free_trees(const LimbGuess& lg, const Forest& forest) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < forest.size(); ++t) {
    std::size_t anchors = 0;
    bool pair = false;
    for (std::size_t s = 0; s < lg.slots.size(); ++s)
      if (lg.tree_of[s] == t) {
        ++anchors;
        pair = pair || !lg.slots[s].single;
      }
    if (!pair && forest.trees[t].vertices.size() > anchors) out.push_back(t);
  }
  return out;
}

struct ConnectGuess {
  std::vector<std::size_t> free;      // free trees
  std::vector<std::size_t> block_of;  // free tree j -> index into long_good_chains
  std::vector<Edge> edges;            // R'
  Weight total_weight = 0;
};

/// R' for one partition of the free trees among the long good chains.
inline ConnectGuess make_connect_guess(const WeightedGraph& g, const LimbGuess& lg, const ContractedForest& cf,
                                       std::vector<std::size_t> free, std::vector<std::size_t> block_of,
                                       std::size_t cap = kHeldKarpCap) {
  ConnectGuess cg{std::move(free), std::move(block_of), {}, 0};
  const auto chains = long_good_chains(lg);
  for (std::size_t r = 0; r < chains.size(); ++r) {
    const std::size_t fx = lg.tree_of[chains[r].first], fy = lg.tree_of[chains[r].second];
    std::vector<std::size_t> nodes{fx};
    if (fy != fx) nodes.push_back(fy);
    for (std::size_t j = 0; j < cg.free.size(); ++j)
      if (cg.block_of[j] == r && std::find(nodes.begin(), nodes.end(), cg.free[j]) == nodes.end())
        nodes.push_back(cg.free[j]);
    CostMatrix local(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = i + 1; j < nodes.size(); ++j) local.set(i, j, cf.w(nodes[i], nodes[j]));
    if (fx == fy) {
      Path p = held_karp_tour_local(local, cap);
      if (p.order.size() >= 2)
        for (std::size_t i = 0; i < p.order.size(); ++i)
          cg.edges.push_back(cf.edge(g, nodes[static_cast<std::size_t>(p.order[i])],
                                     nodes[static_cast<std::size_t>(p.order[(i + 1) % p.order.size()])]));
    } else {
      Path p = held_karp_path_local(local, 0, 1, cap);
      for (std::size_t i = 0; i + 1 < p.order.size(); ++i)
        cg.edges.push_back(cf.edge(g, nodes[static_cast<std::size_t>(p.order[i])],
                                   nodes[static_cast<std::size_t>(p.order[i + 1])]));
    }
  }
  for (const Edge& e : cg.edges) cg.total_weight += e.w;
  return cg;
}

/// CONNECT: one guess per assignment of every free tree to a long good chain.
inline void connect_guesses(const WeightedGraph& g, const LimbGuess& lg, const Forest& forest,
                            const ContractedForest& cf, const std::function<void(const ConnectGuess&)>& emit,
                            std::size_t cap = kHeldKarpCap) {
  const auto free = free_trees(lg, forest);
  const std::size_t blocks = long_good_chains(lg).size();
  if (blocks == 0) {
    if (free.empty()) emit(make_connect_guess(g, lg, cf, free, {}, cap));
    return;
  }
  std::vector<std::size_t> block_of(free.size(), 0);
  while (true) {
    emit(make_connect_guess(g, lg, cf, free, block_of, cap));
    std::size_t i = 0;
    while (i < block_of.size() && ++block_of[i] == blocks) block_of[i++] = 0;
    if (i == block_of.size()) break;
  }
}

/// G_A: chains, limbs, R' and the forest.
inline MultiEdgeSet assemble_ga(const WeightedGraph& g, const OrderedChainGuess& guess, const LimbGuess& lg,
                                const ConnectGuess& cg, const Forest& forest) {
  MultiEdgeSet m;
  m.add_all(guess.as_set().edges(g));
  m.add_all(lg.limbs);
  m.add_all(cg.edges);
  for (const Tree& t : forest.trees) m.add_all(t.edges.edges);
  return m;
}

/// True when the edges touch every vertex 0..n-1 and join them into one component.
inline bool spans_connected(const MultiEdgeSet& m, std::size_t n) {
  DisjointSets sets(std::max(n, m.vertex_bound()));
  std::size_t parts = n;
  for (const Edge& e : m.edges())
    if (sets.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) --parts;
  return parts == 1;
}

/// Per tree, a minimum perfect matching on the odd-degree vertices of G_A in
/// that tree. Throws ParityViolated when a tree holds an odd number of them.
inline Matching tree_parity_matchings(const WeightedGraph& g, const MultiEdgeSet& ga, const Forest& forest) {
  Matching out;
  for (const Tree& t : forest.trees) {
    std::vector<Vertex> odd;
    for (Vertex v : t.vertices)
      if (ga.degree(v) % 2) odd.push_back(v);
    if (odd.size() % 2)
      fail(ErrorKind::ParityViolated, "tree at vertex " + std::to_string(t.vertices.front()) +
                                          " holds an odd number of odd vertices");
    Matching mf = min_weight_perfect_matching(g, odd);
    ensure(mf.total_weight <= t.edges.total_weight, "tree matching heavier than its tree");
    out.pairs.insert(out.pairs.end(), mf.pairs.begin(), mf.pairs.end());
    out.total_weight += mf.total_weight;
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

/// SHORTCUT. Trees made only of guessed single anchors lose their tree and
/// matching edges and those anchors count as bad. In any other tree each
/// guessed single anchor x hands its two limbs to a copy (id n + slot) that
/// counts as bad. The Euler walk of the result keeps each good vertex at
/// its occurrence next to a bad vertex, or else the first, then drops every
/// x in favour of its copy. Throws StructureViolated when the graph lacks
/// the expected shape.
inline Tour shortcut_alg4(const WeightedGraph& g, const VertexPartition& part, const OrderedChainGuess& guess,
                          const LimbGuess& lg, const ConnectGuess& cg, const Forest& forest,
                          const Matching& matching) {
  const std::size_t n = g.size(), m = lg.slots.size(), k = forest.size();
  const std::size_t bound = n + m;
  auto orig = [&](Vertex v) { return static_cast<std::size_t>(v) < n ? v : lg.anchors[static_cast<std::size_t>(v) - n]; };
  auto w = [&](Vertex a, Vertex b) { return g(orig(a), orig(b)); };

  std::vector<std::ptrdiff_t> tree_at(n, -1);
  for (std::size_t t = 0; t < k; ++t)
    for (Vertex v : forest.trees[t].vertices) tree_at[v] = static_cast<std::ptrdiff_t>(t);
  std::vector<std::size_t> singles(k, 0);
  for (std::size_t s = 0; s < m; ++s)
    if (lg.slots[s].single) ++singles[lg.tree_of[s]];
  std::vector<char> only_singles(k, 0);
  for (std::size_t t = 0; t < k; ++t) only_singles[t] = singles[t] > 0 && singles[t] == forest.trees[t].vertices.size();

  std::vector<char> marked(bound, 0), has_copy(n, 0);
  for (Vertex v : part.bad) marked[v] = 1;
  MultiEdgeSet h;
  Weight before = 0;
  h.add_all(guess.as_set().edges(g));
  for (std::size_t s = 0; s < m; ++s) {
    const AnchorSlot& sl = lg.slots[s];
    Vertex end = lg.anchors[s];
    if (sl.single) {
      if (only_singles[lg.tree_of[s]]) {
        marked[end] = 1;
      } else {
        has_copy[end] = 1;
        end = static_cast<Vertex>(n + s);
        marked[n + s] = 1;
      }
    }
    h.add(end, sl.y, g(lg.anchors[s], sl.y));
    if (sl.single) h.add(end, sl.z, g(lg.anchors[s], sl.z));
  }
  h.add_all(cg.edges);
  for (std::size_t t = 0; t < k; ++t) {
    before += forest.trees[t].edges.total_weight;
    if (!only_singles[t]) h.add_all(forest.trees[t].edges.edges);
  }
  for (auto [a, b] : matching.pairs) {
    before += g(a, b);
    if (tree_at[a] >= 0 && tree_at[a] == tree_at[b] && only_singles[static_cast<std::size_t>(tree_at[a])]) continue;
    h.add(a, b, g(a, b));
  }
  before += guess.as_set().weight(g) + lg.total_weight + cg.total_weight;
  const Weight budget = h.total_weight();
  ensure(budget <= before, "modified graph heavier than G'_A");

  // Shape: every vertex used, bad vertices of degree 2, good vertices next to
  // at most one bad vertex.
  std::vector<int> bad_links(bound, 0);
  for (const Edge& e : h.edges()) {
    if (marked[e.v]) ++bad_links[e.u];
    if (marked[e.u]) ++bad_links[e.v];
  }
  for (std::size_t v = 0; v < bound; ++v) {
    const bool exists = v < n || (lg.slots[v - n].single && !only_singles[lg.tree_of[v - n]]);
    if (!exists) continue;
    const int d = h.degree(static_cast<Vertex>(v));
    if (d == 0) fail(ErrorKind::StructureViolated, "vertex " + std::to_string(v) + " is isolated");
    if (marked[v] && d != 2) fail(ErrorKind::StructureViolated, "bad vertex without degree 2");
    if (!marked[v] && bad_links[v] > 1) fail(ErrorKind::StructureViolated, "good vertex next to two bad vertices");
  }

  EulerWalk walk;
  try {
    walk = eulerian_tour(h);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::NotEulerian) fail(ErrorKind::StructureViolated, err.what());
    throw;
  }
  const auto& seq = walk.vertices;
  const std::size_t len = seq.size();
  std::vector<std::ptrdiff_t> chosen(bound, -1);
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex v = seq[i];
    if (marked[v] || marked[seq[(i + len - 1) % len]] || marked[seq[(i + 1) % len]]) {
      if (chosen[v] >= 0) fail(ErrorKind::StructureViolated, "vertex tied to bad vertices twice");
      chosen[v] = static_cast<std::ptrdiff_t>(i);
    }
  }
  for (std::size_t i = 0; i < len; ++i)
    if (chosen[seq[i]] < 0) chosen[seq[i]] = static_cast<std::ptrdiff_t>(i);
  std::vector<char> keep(len, 0);
  for (std::size_t i = 0; i < len; ++i) keep[i] = chosen[seq[i]] == static_cast<std::ptrdiff_t>(i);
  auto all_good = [&](Vertex x, Vertex y, Vertex z) { return !marked[x] && !marked[y] && !marked[z]; };
  auto once = shortcut_walk(seq, keep, w, all_good);

  // Drop each x that has a copy; the copy takes its name.
  std::vector<char> keep2(once.size(), 0);
  for (std::size_t i = 0; i < once.size(); ++i)
    keep2[i] = !(static_cast<std::size_t>(once[i]) < n && has_copy[once[i]]);
  auto beside_good = [&](Vertex x, Vertex y, Vertex z) { return has_copy[y] && !marked[x] && !marked[z]; };
  auto order = shortcut_walk(once, keep2, w, beside_good);
  for (Vertex& v : order) v = orig(v);
  if (!is_hamiltonian_on(order, all_vertices(n))) fail(ErrorKind::StructureViolated, "shortcut walk is not a tour");
  Tour t = canonical(make_tour(g, std::move(order)));
  ensure(t.total_weight <= budget, "tour heavier than G''_A");
  return t;
}

/// Matching and SHORTCUT for one (chain, limb, connect) guess; nullopt when
/// G_A is disconnected or the guess fails a structural check.
inline std::optional<Tour> alg4_guess(const WeightedGraph& g, const VertexPartition& part,
                                      const OrderedChainGuess& guess, const Forest& forest, const LimbGuess& lg,
                                      const ConnectGuess& cg) {
  MultiEdgeSet ga = assemble_ga(g, guess, lg, cg, forest);
  if (!spans_connected(ga, g.size())) return std::nullopt;
  try {
    Matching mm = tree_parity_matchings(g, ga, forest);
    return shortcut_alg4(g, part, guess, lg, cg, forest, mm);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParityViolated || e.kind() == ErrorKind::StructureViolated) return std::nullopt;
    throw;
  }
}

/// Nested search over ordered chain guesses, limb guesses and connect
/// guesses. A limb or connect guess is cut once w(A) + w(F) + w(B') (+ w(R'))
/// exceeds the best tour found so far. No bad vertices runs Christofides;
/// no good vertices or n <= 3 runs the exact DP.
inline SolveReport alg4(const WeightedGraph& g, const VertexPartition& part, const SolveOptions& opt = {}) {
  Stopwatch clock;
  SolveReport r;
  r.algorithm = "alg4";
  r.levels.assign(3, LevelStats{});
  const std::size_t n = g.size();
  if (part.bad.empty()) {
    r.tour = christofides(g);
  } else if (part.good.empty() || n <= 3) {
    r.tour = detail::exact_tour(g, opt.held_karp_cap);
  } else {
    const auto guesses = enumerate_ordered_chains(part.bad, opt.chain_cap_q);
    const std::size_t kmax = std::min(part.bad.size(), part.good.size());
    std::vector<Forest> forests(kmax + 1);
    std::vector<ContractedForest> contracted(kmax + 1);
    for (std::size_t k = 1; k <= kmax; ++k) {
      forests[k] = spanning_t_forest(g, part.good, k);
      contracted[k] = contract(g, forests[k]);
    }
    constexpr Weight kNone = std::numeric_limits<Weight>::max();
    std::atomic<Weight> best_weight{kNone};
    auto lower_best = [&](Weight v) {
      Weight cur = best_weight.load();
      while (v < cur && !best_weight.compare_exchange_weak(cur, v)) {
      }
    };

    const std::size_t workers = std::max<std::size_t>(1, std::min(opt.threads, guesses.size()));
    std::vector<std::optional<Tour>> best(workers);
    std::vector<std::vector<LevelStats>> stats(workers, std::vector<LevelStats>(3));
    striped_for(guesses.size(), workers, [&](std::size_t t, std::size_t i) {
      const OrderedChainGuess& guess = guesses[i];
      auto& lv = stats[t];
      const std::size_t k = guess.size();
      if (k > kmax) {
        ++lv[0].skipped;
        return;
      }
      ++lv[0].evaluated;
      const Forest& forest = forests[k];
      const Weight base = guess.as_set().weight(g) + forest.total_weight();
      auto limit = [&]() -> Weight {
        const Weight b = best_weight.load();
        return b == kNone ? kNone : b - base;
      };
      lv[1].skipped += limb_guesses(
          g, part, guess, forest,
          [&](const LimbGuess& lg) {
            ++lv[1].evaluated;
            connect_guesses(
                g, lg, forest, contracted[k],
                [&](const ConnectGuess& cg) {
                  ++lv[2].evaluated;
                  const Weight b = best_weight.load();
                  if (b != kNone && base + lg.total_weight + cg.total_weight > b) {
                    ++lv[2].skipped;
                    return;
                  }
                  auto tour = alg4_guess(g, part, guess, forest, lg, cg);
                  if (!tour) {
                    ++lv[2].skipped;
                    return;
                  }
                  lower_best(tour->total_weight);
                  if (!best[t] || tour_better(*tour, *best[t])) best[t] = std::move(tour);
                },
                opt.held_karp_cap);
          },
          limit);
    });
    std::optional<Tour> overall;
    for (std::size_t t = 0; t < workers; ++t) {
      for (std::size_t l = 0; l < 3; ++l) {
        r.levels[l].evaluated += stats[t][l].evaluated;
        r.levels[l].skipped += stats[t][l].skipped;
      }
      if (best[t] && (!overall || tour_better(*best[t], *overall))) overall = best[t];
    }
    r.guesses_evaluated = r.levels[2].evaluated;
    r.guesses_skipped = r.levels[2].skipped;
    ensure(overall.has_value(), "every guess was infeasible");
    r.tour = *overall;
  }
  ensure(is_hamiltonian_on(r.tour.order, all_vertices(n)), "alg4 output is not a tour");
  return detail::finish(std::move(r), part, clock);
}

}  // namespace neartsp
