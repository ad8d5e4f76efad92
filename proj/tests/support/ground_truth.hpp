#pragma once

// Reads the structures an algorithm is supposed to guess off an optimal tour.

#include <algorithm>
#include <optional>
#include <vector>

#include "neartsp/alg_q.hpp"
#include "neartsp/chains.hpp"
#include "neartsp/graph.hpp"
#include "neartsp/structures.hpp"

namespace truth {

using namespace neartsp;

/// Maximal runs of bad vertices along the tour, as oriented in the tour,
/// starting from a position right after a good vertex. Empty when the tour
/// has no good vertex.
inline std::vector<Chain> bad_runs(const Tour& t, const std::vector<char>& bad) {
  const auto& o = t.order;
  const std::size_t n = o.size();
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i)
    if (!bad[o[i]]) {
      start = i;
      break;
    }
  std::vector<Chain> runs;
  if (start == n) return runs;
  for (std::size_t s = 1; s <= n; ++s) {
    Vertex v = o[(start + s) % n];
    if (!bad[v]) continue;
    Vertex prev = o[(start + s - 1) % n];
    if (!bad[prev]) runs.emplace_back();
    runs.back().push_back(v);
  }
  return runs;
}

/// The bad chains of `t` in the form the p-enumeration emits: each chain
/// with its smaller endpoint first, chains ordered by smallest vertex.
inline ChainSet chains_p(const Tour& t, const std::vector<char>& bad) {
  ChainSet cs;
  for (auto c : bad_runs(t, bad)) {
    if (c.front() > c.back()) std::reverse(c.begin(), c.end());
    cs.chains.push_back(std::move(c));
  }
  std::sort(cs.chains.begin(), cs.chains.end(), [](const Chain& a, const Chain& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  return cs;
}

/// The q-algorithm's guesses as the optimal tour realises them.
struct QTruth {
  OrderedChainGuess guess;          // chains in tour order
  std::vector<Vertex> anchors;      // real anchor per slot
  std::vector<std::vector<Vertex>> good_runs;  // good vertices of gap i, in tour order
  Weight a = 0, b = 0, r = 0;       // chain, limb and good-run weights
};

inline QTruth q_truth(const WeightedGraph& g, const Tour& t, const std::vector<char>& bad) {
  QTruth out;
  const auto& o = t.order;
  const std::size_t n = o.size();
  auto runs = bad_runs(t, bad);
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[o[i]] = i;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::vector<Vertex> gap;
    for (std::size_t s = pos[runs[i].back()] + 1;; ++s) {
      Vertex v = o[s % n];
      if (bad[v]) break;
      gap.push_back(v);
    }
    out.guess.anchor.push_back(gap.size() == 1 ? 1 : 2);
    out.good_runs.push_back(gap);
    if (gap.size() == 1) {
      out.anchors.push_back(gap[0]);
    } else {
      out.anchors.push_back(gap.front());
      out.anchors.push_back(gap.back());
    }
  }
  out.guess.chains = runs;
  for (const auto& c : runs) out.a += ChainSet::chain_weight(g, c);
  for (const auto& r : out.good_runs) out.r += ChainSet::chain_weight(g, r);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex u = o[i], v = o[(i + 1) % n];
    if (bad[u] != bad[v]) out.b += g(u, v);
  }
  return out;
}

/// The limb configuration of the existence argument: tree_of from the real
/// anchors; an anchor inside its own V_x is kept, the others take the first
/// unused vertex of V_x.
inline LimbGuess q_truth_limbs(const WeightedGraph& g, std::size_t q, const QTruth& tr, const Forest& forest) {
  auto slots = anchor_slots(tr.guess);
  const std::size_t m = slots.size();
  std::vector<std::size_t> tree_of(m);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t f = 0; f < forest.size(); ++f) {
      const auto& vs = forest.trees[f].vertices;
      if (std::binary_search(vs.begin(), vs.end(), tr.anchors[s])) tree_of[s] = f;
    }
  std::vector<Vertex> anchors(m, -1);
  std::vector<char> used(g.size(), 0);
  std::vector<std::vector<Vertex>> vx(m);
  for (std::size_t s = 0; s < m; ++s) {
    vx[s] = potential_vertices(g, slots[s], forest.trees[tree_of[s]], q);
    if (std::find(vx[s].begin(), vx[s].end(), tr.anchors[s]) != vx[s].end()) {
      anchors[s] = tr.anchors[s];
      used[anchors[s]] = 1;
    }
  }
  for (std::size_t s = 0; s < m; ++s) {
    if (anchors[s] >= 0) continue;
    for (Vertex v : vx[s])
      if (!used[v]) {
        anchors[s] = v;
        used[v] = 1;
        break;
      }
  }
  auto potential = potential_sets(g, slots, forest, tree_of, q);
  return make_limb_guess(g, slots, tree_of, anchors, potential);
}

/// Each free tree goes to the first long good chain that visits it; nullopt
/// when some free tree is visited by none.
inline std::optional<ConnectGuess> q_truth_connect(const WeightedGraph& g, const QTruth& tr, const LimbGuess& lg,
                                                   const Forest& forest) {
  auto free = free_trees(lg, forest);
  auto chains = long_good_chains(lg);
  std::vector<std::size_t> block_of(free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    const auto& vs = forest.trees[free[j]].vertices;
    bool found = false;
    for (std::size_t r = 0; r < chains.size() && !found; ++r) {
      const auto& run = tr.good_runs[lg.slots[chains[r].first].gap];
      for (Vertex v : run)
        if (std::binary_search(vs.begin(), vs.end(), v)) found = true;
      if (found) block_of[j] = r;
    }
    if (!found) return std::nullopt;
  }
  return make_connect_guess(g, lg, contract(g, forest), free, block_of);
}

}  // namespace truth
