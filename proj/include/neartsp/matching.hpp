#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "neartsp/error.hpp"
#include "neartsp/graph.hpp"
#include "neartsp/structures.hpp"

namespace neartsp {

namespace detail {

// Exact minimum perfect matching by DP over subsets. The lowest unmatched
// index is always paired first; among optimal partners the smallest index
// wins, which yields the lexicographically smallest sorted pair list.
inline std::vector<std::pair<std::size_t, std::size_t>> min_matching_dp(const CostMatrix& c) {
  const std::size_t k = c.k;
  const std::size_t full = (std::size_t{1} << k) - 1;
  constexpr Weight inf = std::numeric_limits<Weight>::max();
  // best[mask] = min weight to perfectly match the vertices NOT in mask.
  std::vector<Weight> best(full + 1, inf);
  best[full] = 0;
  for (std::size_t mask = full; mask-- > 0;) {
    const std::size_t low = static_cast<std::size_t>(std::countr_one(mask));
    if (static_cast<std::size_t>(std::popcount(mask)) % 2 != k % 2) continue;
    Weight b = inf;
    for (std::size_t j = low + 1; j < k; ++j) {
      if (mask >> j & 1) continue;
      const Weight rest = best[mask | (std::size_t{1} << low) | (std::size_t{1} << j)];
      if (rest != inf) b = std::min(b, c(low, j) + rest);
    }
    best[mask] = b;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t mask = 0;
  while (mask != full) {
    const std::size_t low = static_cast<std::size_t>(std::countr_one(mask));
    for (std::size_t j = low + 1; j < k; ++j) {
      if (mask >> j & 1) continue;
      const std::size_t next = mask | (std::size_t{1} << low) | (std::size_t{1} << j);
      if (best[next] != inf && c(low, j) + best[next] == best[mask]) {
        pairs.emplace_back(low, j);
        mask = next;
        break;
      }
    }
  }
  return pairs;
}

// Maximum-weight matching on a general graph, Edmonds' blossom algorithm
// with dual variables, O(n^3). Integer weights keep every dual integral
// (slacks are computed on doubled weights). With max_cardinality set, the
// result is a maximum-weight matching among maximum-cardinality ones.
class BlossomMatcher {
 public:
  struct InputEdge {
    int i, j;
    Weight w;
  };

  BlossomMatcher(int nvertex, std::vector<InputEdge> edges, bool max_cardinality)
      : nv_(nvertex), edges_(std::move(edges)), maxcard_(max_cardinality) {}

  /// mate[v] = matched partner or -1.
  std::vector<int> solve() {
    const int n = nv_;
    const int ne = static_cast<int>(edges_.size());
    if (ne == 0) return std::vector<int>(n, -1);
    Weight maxweight = 0;
    for (const auto& e : edges_) maxweight = std::max(maxweight, e.w);
    endpoint_.resize(2 * ne);
    for (int p = 0; p < 2 * ne; ++p) endpoint_[p] = (p % 2 == 0) ? edges_[p / 2].i : edges_[p / 2].j;
    neighbend_.assign(n, {});
    for (int k = 0; k < ne; ++k) {
      neighbend_[edges_[k].i].push_back(2 * k + 1);
      neighbend_[edges_[k].j].push_back(2 * k);
    }
    mate_.assign(n, -1);
    label_.assign(2 * n, 0);
    labelend_.assign(2 * n, -1);
    inblossom_.resize(n);
    for (int v = 0; v < n; ++v) inblossom_[v] = v;
    blossomparent_.assign(2 * n, -1);
    blossomchilds_.assign(2 * n, {});
    blossombase_.assign(2 * n, -1);
    for (int v = 0; v < n; ++v) blossombase_[v] = v;
    blossomendps_.assign(2 * n, {});
    bestedge_.assign(2 * n, -1);
    blossombestedges_.assign(2 * n, {});
    has_bestedges_.assign(2 * n, 0);
    unused_.clear();
    for (int b = n; b < 2 * n; ++b) unused_.push_back(b);
    dualvar_.assign(2 * n, 0);
    for (int v = 0; v < n; ++v) dualvar_[v] = maxweight;
    allowedge_.assign(ne, 0);
    queue_.clear();

    for (int stage = 0; stage < n; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = n; b < 2 * n; ++b) {
        blossombestedges_[b].clear();
        has_bestedges_[b] = 0;
      }
      std::fill(allowedge_.begin(), allowedge_.end(), 0);
      queue_.clear();
      for (int v = 0; v < n; ++v)
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);

      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          int v = queue_.back();
          queue_.pop_back();
          for (int p : neighbend_[v]) {
            int k = p / 2;
            int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            Weight kslack = 0;
            if (!allowedge_[k]) {
              kslack = slack(k);
              if (kslack <= 0) allowedge_[k] = 1;
            }
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            } else if (label_[inblossom_[w]] == 1) {
              int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
            }
          }
        }
        if (augmented) break;

        int deltatype = -1;
        Weight delta = 0;
        int deltaedge = -1, deltablossom = -1;
        if (!maxcard_) {
          deltatype = 1;
          delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n);
        }
        for (int v = 0; v < n; ++v) {
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            Weight d = slack(bestedge_[v]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        }
        for (int b = 0; b < 2 * n; ++b) {
          if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
            Weight ks = slack(bestedge_[b]);
            ensure(ks % 2 == 0, "blossom: odd slack between S-blossoms");
            Weight d = ks / 2;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        }
        for (int b = n; b < 2 * n; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
              (deltatype == -1 || dualvar_[b] < delta)) {
            delta = dualvar_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }
        if (deltatype == -1) {
          deltatype = 1;
          delta = std::max<Weight>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n));
        }
        for (int v = 0; v < n; ++v) {
          if (label_[inblossom_[v]] == 1) dualvar_[v] -= delta;
          else if (label_[inblossom_[v]] == 2) dualvar_[v] += delta;
        }
        for (int b = n; b < 2 * n; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1) dualvar_[b] += delta;
            else if (label_[b] == 2) dualvar_[b] -= delta;
          }
        }
        if (deltatype == 1) {
          break;
        } else if (deltatype == 2) {
          allowedge_[deltaedge] = 1;
          int i = edges_[deltaedge].i, j = edges_[deltaedge].j;
          if (label_[inblossom_[i]] == 0) std::swap(i, j);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = 1;
          queue_.push_back(edges_[deltaedge].i);
        } else {
          expand_blossom(deltablossom, false);
        }
      }
      if (!augmented) break;
      for (int b = n; b < 2 * n; ++b)
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0)
          expand_blossom(b, true);
    }
    std::vector<int> out(n, -1);
    for (int v = 0; v < n; ++v)
      if (mate_[v] >= 0) out[v] = endpoint_[mate_[v]];
    return out;
  }

 private:
  Weight slack(int k) const { return dualvar_[edges_[k].i] + dualvar_[edges_[k].j] - 2 * edges_[k].w; }

  void blossom_leaves(int b, std::vector<int>& out) const {
    if (b < nv_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[b]) blossom_leaves(t, out);
  }
  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    blossom_leaves(b, out);
    return out;
  }

  void assign_label(int w, int t, int p) {
    int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      blossom_leaves(b, queue_);
    } else if (t == 2) {
      int base = blossombase_[b];
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = edges_[k].i, w = edges_[k].j;
    int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    int b = unused_.back();
    unused_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    auto& path = blossomchilds_[b];
    auto& endps = blossomendps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;
    for (int leaf : leaves(b)) {
      if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
      inblossom_[leaf] = b;
    }
    std::vector<int> bestedgeto(2 * nv_, -1);
    for (int sub : path) {
      std::vector<int> nblist;
      if (!has_bestedges_[sub]) {
        for (int leaf : leaves(sub))
          for (int p : neighbend_[leaf]) nblist.push_back(p / 2);
      } else {
        nblist = blossombestedges_[sub];
      }
      for (int kk : nblist) {
        int i = edges_[kk].i, j = edges_[kk].j;
        if (inblossom_[j] == b) std::swap(i, j);
        int bj = inblossom_[j];
        if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj])))
          bestedgeto[bj] = kk;
      }
      blossombestedges_[sub].clear();
      has_bestedges_[sub] = 0;
      bestedge_[sub] = -1;
    }
    blossombestedges_[b].clear();
    for (int kk : bestedgeto)
      if (kk != -1) blossombestedges_[b].push_back(kk);
    has_bestedges_[b] = 1;
    bestedge_[b] = -1;
    for (int kk : blossombestedges_[b])
      if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
  }

  void expand_blossom(int b, bool endstage) {
    const std::vector<int> childs = blossomchilds_[b];
    for (int s : childs) {
      blossomparent_[s] = -1;
      if (s < nv_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        for (int leaf : leaves(s)) inblossom_[leaf] = s;
      }
    }
    if (!endstage && label_[b] == 2) {
      const auto& ch = blossomchilds_[b];
      const auto& ep = blossomendps_[b];
      const int len = static_cast<int>(ch.size());
      auto at = [len](int j) { return ((j % len) + len) % len; };
      int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
      int jstep, endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[ep[at(j - endptrick)] ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allowedge_[ep[at(j - endptrick)] / 2] = 1;
        j += jstep;
        p = ep[at(j - endptrick)] ^ endptrick;
        allowedge_[p / 2] = 1;
        j += jstep;
      }
      int bv = ch[at(j)];
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (ch[at(j)] != entrychild) {
        bv = ch[at(j)];
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        int found = -1;
        for (int leaf : leaves(bv))
          if (label_[leaf] != 0) {
            found = leaf;
            break;
          }
        if (found != -1) {
          label_[found] = 0;
          label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
          assign_label(found, 2, labelend_[found]);
        }
        j += jstep;
      }
    }
    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    has_bestedges_[b] = 0;
    bestedge_[b] = -1;
    unused_.push_back(b);
  }

  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= nv_) augment_blossom(t, v);
    auto& ch = blossomchilds_[b];
    auto& ep = blossomendps_[b];
    const int len = static_cast<int>(ch.size());
    auto at = [len](int j) { return ((j % len) + len) % len; };
    int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
    int j = i;
    int jstep, endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = ch[at(j)];
      int p = ep[at(j - endptrick)] ^ endptrick;
      if (t >= nv_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = ch[at(j)];
      if (t >= nv_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(ch.begin(), ch.begin() + i, ch.end());
    std::rotate(ep.begin(), ep.begin() + i, ep.end());
    blossombase_[b] = blossombase_[ch[0]];
  }

  void augment_matching(int k) {
    const int ends[2][2] = {{edges_[k].i, 2 * k + 1}, {edges_[k].j, 2 * k}};
    for (const auto& start : ends) {
      int s = start[0], p = start[1];
      while (true) {
        int bs = inblossom_[s];
        if (bs >= nv_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        int t = endpoint_[labelend_[bs]];
        int bt = inblossom_[t];
        s = endpoint_[labelend_[bt]];
        int j = endpoint_[labelend_[bt] ^ 1];
        if (bt >= nv_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  int nv_;
  std::vector<InputEdge> edges_;
  bool maxcard_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_, label_, labelend_, inblossom_, blossomparent_, blossombase_, bestedge_;
  std::vector<std::vector<int>> blossomchilds_, blossomendps_, blossombestedges_;
  std::vector<char> has_bestedges_;
  std::vector<int> unused_;
  std::vector<Weight> dualvar_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
};

// Minimum perfect matching on a complete graph through the blossom matcher:
// weights are flipped to (max + 1 - w) and cardinality is maximised first.
inline std::vector<std::pair<std::size_t, std::size_t>> min_matching_blossom(const CostMatrix& c) {
  const std::size_t k = c.k;
  Weight top = 0;
  for (Weight w : c.c) top = std::max(top, w);
  std::vector<BlossomMatcher::InputEdge> edges;
  edges.reserve(k * (k - 1) / 2);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      edges.push_back({static_cast<int>(i), static_cast<int>(j), top + 1 - c(i, j)});
  auto mate = BlossomMatcher(static_cast<int>(k), std::move(edges), true).solve();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    ensure(mate[i] >= 0, "blossom matcher left a vertex unmatched");
    if (static_cast<std::size_t>(mate[i]) > i) pairs.emplace_back(i, static_cast<std::size_t>(mate[i]));
  }
  return pairs;
}

}  // namespace detail

/// Sets at or below this size are matched by the subset DP, which gives the
/// lexicographically smallest optimal pair list; larger sets go to blossom.
inline constexpr std::size_t kMatchingDpLimit = 16;

/// Minimum-weight perfect matching on `vertices` under `cost(u, v)`
/// (real vertex ids). Throws OddSet for an odd-size set.
template <class Cost>
Matching min_weight_perfect_matching(std::span<const Vertex> vertices, const Cost& cost) {
  const std::size_t k = vertices.size();
  if (k % 2 != 0) fail(ErrorKind::OddSet, "perfect matching needs an even vertex count, got " + std::to_string(k));
  Matching out;
  if (k == 0) return out;
  CostMatrix c(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) c.set(i, j, cost(vertices[i], vertices[j]));
  auto pairs = k <= kMatchingDpLimit ? detail::min_matching_dp(c) : detail::min_matching_blossom(c);
  for (auto [i, j] : pairs) {
    Vertex a = vertices[i], b = vertices[j];
    out.pairs.emplace_back(std::min(a, b), std::max(a, b));
    out.total_weight += c(i, j);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

inline Matching min_weight_perfect_matching(const WeightedGraph& g, std::span<const Vertex> vertices) {
  return min_weight_perfect_matching(vertices, [&](Vertex a, Vertex b) { return g(a, b); });
}

}  // namespace neartsp
