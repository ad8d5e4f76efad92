#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "neartsp/error.hpp"
#include "neartsp/graph.hpp"
#include "neartsp/structures.hpp"

namespace neartsp {

inline constexpr std::size_t kChainCapP = 7;
inline constexpr std::size_t kChainCapQ = 5;

using Chain = std::vector<Vertex>;

/// Vertex-disjoint paths over the bad vertices. Unordered sets keep each
/// chain with its smaller endpoint first.
struct ChainSet {
  std::vector<Chain> chains;

  std::size_t size() const noexcept { return chains.size(); }

  std::vector<Edge> edges(const WeightedGraph& g) const {
    std::vector<Edge> out;
    for (const auto& c : chains)
      for (std::size_t i = 0; i + 1 < c.size(); ++i) out.push_back(make_edge(c[i], c[i + 1], g(c[i], c[i + 1])));
    return out;
  }

  static Weight chain_weight(const WeightedGraph& g, const Chain& c) {
    Weight s = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) s += g(c[i], c[i + 1]);
    return s;
  }

  Weight weight(const WeightedGraph& g) const {
    Weight s = 0;
    for (const auto& c : chains) s += chain_weight(g, c);
    return s;
  }

  friend bool operator==(const ChainSet&, const ChainSet&) = default;
};

namespace detail {

inline void check_chain_cap(std::size_t size, std::size_t cap) {
  if (size > cap)
    fail(ErrorKind::CapExceeded,
         "chain enumeration over " + std::to_string(size) + " bad vertices exceeds cap " + std::to_string(cap));
}

// Recursively splits `rest` into blocks: the block holding the smallest
// remaining vertex is chosen first (as a subset of the others), then every
// ordering of it with first < last.
inline void chain_partitions(std::vector<Vertex> rest, std::vector<Chain>& acc,
                             const std::function<void(const ChainSet&)>& emit) {
  if (rest.empty()) {
    emit(ChainSet{acc});
    return;
  }
  const Vertex head = rest.front();
  const std::vector<Vertex> others(rest.begin() + 1, rest.end());
  const std::size_t m = others.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<Vertex> block{head}, left;
    for (std::size_t i = 0; i < m; ++i) (mask >> i & 1 ? block : left).push_back(others[i]);
    std::sort(block.begin(), block.end());
    do {
      if (block.size() > 1 && block.front() > block.back()) continue;
      acc.push_back(block);
      chain_partitions(left, acc, emit);
      acc.pop_back();
    } while (std::next_permutation(block.begin(), block.end()));
  }
}

}  // namespace detail

/// Calls `emit` once for every split of `bad` into unordered vertex-disjoint
/// paths, a path and its reversal counted once. Counts for 1..4 vertices are
/// 1, 2, 7, 34.
inline void enumerate_bad_chains(std::span<const Vertex> bad, const std::function<void(const ChainSet&)>& emit,
                                 std::size_t cap = kChainCapP) {
  detail::check_chain_cap(bad.size(), cap);
  if (bad.empty()) return;
  std::vector<Vertex> rest(bad.begin(), bad.end());
  std::sort(rest.begin(), rest.end());
  std::vector<Chain> acc;
  detail::chain_partitions(rest, acc, emit);
}

inline std::vector<ChainSet> all_bad_chains(std::span<const Vertex> bad, std::size_t cap = kChainCapP) {
  std::vector<ChainSet> out;
  enumerate_bad_chains(bad, [&](const ChainSet& c) { out.push_back(c); }, cap);
  return out;
}

/// Chains in cyclic tour order, each oriented a_i ... b_i, with anchor[i]
/// the number of anchor slots (1 or 2) in the gap after chain i: 1 means one
/// good vertex sits between b_i and a_{i+1}, 2 means at least two.
struct OrderedChainGuess {
  std::vector<Chain> chains;
  std::vector<int> anchor;

  std::size_t size() const noexcept { return chains.size(); }
  Vertex head(std::size_t i) const { return chains[i].front(); }
  Vertex tail(std::size_t i) const { return chains[i].back(); }

  ChainSet as_set() const {
    ChainSet s;
    for (auto c : chains) {
      if (c.front() > c.back()) std::reverse(c.begin(), c.end());
      s.chains.push_back(std::move(c));
    }
    return s;
  }

  friend bool operator==(const OrderedChainGuess&, const OrderedChainGuess&) = default;
};

namespace detail {

// Flattened cyclic word: chain vertices, with the gap code after each
// chain's last vertex and -1 between vertices of the same chain.
inline std::vector<int> ordered_word(const std::vector<Chain>& chains, const std::vector<int>& anchor) {
  std::vector<int> w;
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t j = 0; j < chains[i].size(); ++j) {
      w.push_back(chains[i][j]);
      w.push_back(j + 1 == chains[i].size() ? anchor[i] : -1);
    }
  return w;
}

// Minimum word over all rotations by whole chains and the reflection.
inline std::vector<int> ordered_key(const std::vector<Chain>& chains, const std::vector<int>& anchor) {
  const std::size_t k = chains.size();
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<Chain> c = chains;
    std::vector<int> f = anchor;
    if (dir == 1) {
      // Reversed traversal: chains in reverse order, each reversed; the gap
      // after reversed chain j is the gap that preceded chain j.
      std::reverse(c.begin(), c.end());
      for (auto& ch : c) std::reverse(ch.begin(), ch.end());
      std::vector<int> g(k);
      for (std::size_t j = 0; j < k; ++j) g[j] = anchor[(k - j + k - 2) % k];
      f = g;
    }
    for (std::size_t r = 0; r < k; ++r) {
      std::vector<Chain> rc(c.begin() + static_cast<long>(r), c.end());
      rc.insert(rc.end(), c.begin(), c.begin() + static_cast<long>(r));
      std::vector<int> rf(f.begin() + static_cast<long>(r), f.end());
      rf.insert(rf.end(), f.begin(), f.begin() + static_cast<long>(r));
      auto w = ordered_word(rc, rf);
      if (best.empty() || w < best) best = std::move(w);
    }
  }
  return best;
}

}  // namespace detail

/// Every distinct (chain split, cyclic order, orientation, anchor counts)
/// over `bad`, one representative per class of rotations and reflections.
/// The first chain of each emitted guess is the one holding the smallest
/// bad vertex. An empty set yields nothing.
inline std::vector<OrderedChainGuess> enumerate_ordered_chains(std::span<const Vertex> bad,
                                                               std::size_t cap = kChainCapQ) {
  detail::check_chain_cap(bad.size(), cap);
  std::vector<OrderedChainGuess> out;
  std::set<std::vector<int>> seen;
  enumerate_bad_chains(
      bad,
      [&](const ChainSet& set) {
        const std::size_t k = set.size();
        // chain_partitions emits the block with the smallest vertex first.
        std::vector<std::size_t> perm(k);
        for (std::size_t i = 0; i < k; ++i) perm[i] = i;
        do {
          for (std::size_t orient = 0; orient < (std::size_t{1} << k); ++orient) {
            bool redundant = false;
            std::vector<Chain> chains;
            for (std::size_t i = 0; i < k; ++i) {
              Chain c = set.chains[perm[i]];
              if (orient >> i & 1) {
                if (c.size() == 1) redundant = true;
                std::reverse(c.begin(), c.end());
              }
              chains.push_back(std::move(c));
            }
            if (redundant) continue;
            for (std::size_t fm = 0; fm < (std::size_t{1} << k); ++fm) {
              std::vector<int> anchor(k);
              for (std::size_t i = 0; i < k; ++i) anchor[i] = (fm >> i & 1) ? 2 : 1;
              if (!seen.insert(detail::ordered_key(chains, anchor)).second) continue;
              out.push_back(OrderedChainGuess{chains, anchor});
            }
          }
        } while (std::next_permutation(perm.begin() + 1, perm.end()));
      },
      cap);
  return out;
}

}  // namespace neartsp
