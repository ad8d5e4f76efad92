#include <gtest/gtest.h>

#include <random>

#include "neartsp/matching.hpp"
#include "neartsp/spanning.hpp"
#include "support/oracles.hpp"

using namespace neartsp;

TEST(Matching, TwoVertices) {
  auto g = WeightedGraph::from_upper(3, std::vector<Weight>{4, 9, 2});
  std::vector<Vertex> vs{2, 0};
  auto m = min_weight_perfect_matching(g, vs);
  ASSERT_EQ(m.pairs.size(), 1u);
  EXPECT_EQ(m.pairs[0], (std::pair<Vertex, Vertex>{0, 2}));
  EXPECT_EQ(m.total_weight, 9);
}

TEST(Matching, ForcedOptimum) {
  auto g = WeightedGraph::from_upper(4, std::vector<Weight>{1, 10, 10, 10, 10, 1});
  auto all = all_vertices(4);
  auto m = min_weight_perfect_matching(g, all);
  EXPECT_EQ(m.total_weight, 2);
  EXPECT_EQ(m.pairs, (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}}));
}

TEST(Matching, OddSetThrows) {
  auto g = WeightedGraph::from_upper(3, std::vector<Weight>{1, 1, 1});
  auto all = all_vertices(3);
  try {
    min_weight_perfect_matching(g, all);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OddSet);
  }
  EXPECT_TRUE(min_weight_perfect_matching(g, std::span<const Vertex>{}).pairs.empty());
}

TEST(Matching, TieBreakIsLexicographic) {
  std::vector<Weight> m(16, 3);
  for (int i = 0; i < 4; ++i) m[i * 5] = 0;
  auto all = all_vertices(4);
  auto r = min_weight_perfect_matching(WeightedGraph(4, m), all);
  EXPECT_EQ(r.pairs, (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}}));
}

TEST(Matching, DpMatchesEnumeration) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t k = 2 * (1 + trial % 5);
    auto g = oracle::random_graph(rng, k, 1, 60);
    auto all = all_vertices(k);
    auto w = [&](Vertex a, Vertex b) { return g(a, b); };
    auto m = min_weight_perfect_matching(g, all);
    EXPECT_EQ(m.total_weight, oracle::matching_by_enumeration(w, all));
    std::vector<char> hit(k, 0);
    Weight sum = 0;
    for (auto [a, b] : m.pairs) {
      EXPECT_FALSE(hit[a] || hit[b]);
      hit[a] = hit[b] = 1;
      sum += g(a, b);
    }
    EXPECT_EQ(sum, m.total_weight);
  }
}

TEST(Matching, BlossomMatchesEnumeration) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t k = 2 * (1 + trial % 6);
    auto g = trial % 2 ? oracle::random_graph(rng, k, 1, 9) : oracle::random_metric(rng, k, 1, 60);
    auto c = CostMatrix::of(g, all_vertices(k));
    auto pairs = detail::min_matching_blossom(c);
    Weight sum = 0;
    std::vector<char> hit(k, 0);
    for (auto [a, b] : pairs) {
      EXPECT_FALSE(hit[a] || hit[b]);
      hit[a] = hit[b] = 1;
      sum += c(a, b);
    }
    EXPECT_EQ(pairs.size(), k / 2);
    auto w = [&](Vertex a, Vertex b) { return g(a, b); };
    EXPECT_EQ(sum, oracle::matching_by_enumeration(w, all_vertices(k))) << "trial " << trial;
  }
}

TEST(Matching, BlossomAgreesWithDpOnLargerSets) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t k = 14 + 2 * (trial % 2);
    auto g = oracle::random_graph(rng, k, 1, 1000);
    auto c = CostMatrix::of(g, all_vertices(k));
    Weight dp = 0, bl = 0;
    for (auto [a, b] : detail::min_matching_dp(c)) dp += c(a, b);
    for (auto [a, b] : detail::min_matching_blossom(c)) bl += c(a, b);
    EXPECT_EQ(dp, bl);
  }
}

TEST(Matching, BeatsRandomMatchings) {
  std::mt19937_64 rng(23);
  auto g = oracle::random_graph(rng, 20, 1, 100);
  auto all = all_vertices(20);
  Weight best = min_weight_perfect_matching(g, all).total_weight;
  for (int s = 0; s < 100; ++s) {
    auto perm = all;
    std::shuffle(perm.begin(), perm.end(), rng);
    Weight w = 0;
    for (std::size_t i = 0; i < perm.size(); i += 2) w += g(perm[i], perm[i + 1]);
    EXPECT_LE(best, w);
  }
}

TEST(Matching, TreeClaimOnMetricTrees) {
  // For a tree T in a metric graph and an even subset S of its vertices, the
  // minimum perfect matching on S weighs at most w(T).
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 4 + trial % 8;
    auto g = oracle::random_metric(rng, n, 1, 50);
    Weight tree = 0;
    for (Vertex v = 1; v < static_cast<Vertex>(n); ++v) tree += g(v, std::uniform_int_distribution<Vertex>(0, v - 1)(rng));
    std::vector<Vertex> s;
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
      if (rng() % 2) s.push_back(v);
    if (s.size() % 2) s.pop_back();
    EXPECT_LE(min_weight_perfect_matching(g, s).total_weight, tree);
  }
}
