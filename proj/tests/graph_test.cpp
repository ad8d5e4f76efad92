#include <gtest/gtest.h>

#include <random>

#include "neartsp/graph.hpp"
#include "support/oracles.hpp"

using namespace neartsp;

namespace {

// w(0,2) = 5, every other pair 1.
WeightedGraph four() { return WeightedGraph::from_upper(4, std::vector<Weight>{1, 5, 1, 1, 1, 1}); }

WeightedGraph ones(std::size_t n) {
  std::vector<Weight> m(n * n, 1);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 0;
  return WeightedGraph(n, m);
}

}  // namespace

TEST(Graph, RejectsBadMatrices) {
  EXPECT_THROW(WeightedGraph(2, {0, 1, 2, 0}), Error);
  EXPECT_THROW(WeightedGraph(2, {1, 1, 1, 0}), Error);
  EXPECT_THROW(WeightedGraph(2, {0, -1, -1, 0}), Error);
  EXPECT_THROW(WeightedGraph(0, {}), Error);
}

TEST(Graph, ViolatingTrianglesOfMetricCliqueIsEmpty) {
  EXPECT_TRUE(violating_triangles(ones(4)).empty());
  EXPECT_TRUE(violating_triangles(ones(2)).empty());
  EXPECT_TRUE(is_metric(ones(1)));
}

TEST(Graph, ViolatingTrianglesOfFour) {
  auto g = four();
  const auto& v = violating_triangles(g);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].triple, (std::array<Vertex, 3>{0, 1, 2}));
  EXPECT_EQ(v[0].apex, 1);
  EXPECT_EQ(v[1].triple, (std::array<Vertex, 3>{0, 2, 3}));
  EXPECT_EQ(v[1].apex, 3);
  EXPECT_EQ(v[0].long_side(), (std::array<Vertex, 2>{0, 2}));
  EXPECT_FALSE(is_metric(g));
}

TEST(Graph, BadVerticesP) {
  EXPECT_TRUE(bad_vertices_p(ones(5)).bad.empty());
  auto p = bad_vertices_p(four());
  EXPECT_EQ(p.bad, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(p.parameter(), 4u);

  // Only the triple {0,1,2} violates: w(0,2) = 5 with w(0,1) = w(1,2) = 2;
  // every edge touching 3 or 4 weighs 3.
  std::vector<Weight> m = {0, 2, 5, 3, 3, 2, 0, 2, 3, 3, 5, 2, 0, 3, 3, 3, 3, 3, 0, 3, 3, 3, 3, 3, 0};
  WeightedGraph g(5, m);
  auto q = bad_vertices_p(g);
  EXPECT_EQ(q.bad, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(q.good, (std::vector<Vertex>{3, 4}));
}

TEST(Graph, MinViolatingSet) {
  EXPECT_TRUE(min_violating_set(ones(4)).bad.empty());
  auto q = min_violating_set(four());
  EXPECT_EQ(q.bad, (std::vector<Vertex>{0}));
  EXPECT_EQ(q.kind, PartitionKind::ByQ);

  // Two disjoint violating triangles {0,1,2} and {3,4,5}.
  std::vector<Weight> m(36, 4);
  for (int i = 0; i < 6; ++i) m[i * 6 + i] = 0;
  m[0 * 6 + 2] = m[2 * 6 + 0] = 9;
  m[3 * 6 + 5] = m[5 * 6 + 3] = 9;
  WeightedGraph g(6, m);
  auto r = min_violating_set(g);
  EXPECT_EQ(r.bad.size(), 2u);
  EXPECT_EQ(r.bad, oracle::min_violating_set(g));
  EXPECT_THROW(min_violating_set(g, 1), Error);
}

TEST(Graph, MinViolatingSetMatchesSubsetOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 4 + trial % 6;
    auto g = oracle::random_graph(rng, n, 1, 20);
    auto got = min_violating_set(g);
    EXPECT_EQ(got.bad, oracle::min_violating_set(g)) << "trial " << trial;
    auto rest = induced_subgraph(g, got.good);
    EXPECT_TRUE(is_metric(rest));
    EXPECT_LE(got.bad.size(), bad_vertices_p(g).bad.size());
    EXPECT_EQ(is_metric(g), got.bad.empty());
    EXPECT_EQ(is_metric(g), bad_vertices_p(g).bad.empty());
  }
}

TEST(Graph, ViolationsMatchDirectCheck) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(rng, 7, 1, 10);
    std::size_t count = 0;
    for (Vertex a = 0; a < 7; ++a)
      for (Vertex b = a + 1; b < 7; ++b)
        for (Vertex c = b + 1; c < 7; ++c) count += oracle::violated(g, a, b, c);
    EXPECT_EQ(violating_triangles(g).size(), count);
    for (const auto& t : violating_triangles(g)) {
      auto [x, z] = t.long_side();
      EXPECT_GT(g(x, z), g(x, t.apex) + g(t.apex, z));
    }
  }
}
