#include <gtest/gtest.h>

#include <algorithm>

#include "neartsp/euler.hpp"

using namespace neartsp;

namespace {

// Every edge id appears once and consecutive walk vertices are its endpoints.
void expect_euler(const MultiEdgeSet& g, const EulerWalk& w) {
  ASSERT_EQ(w.vertices.size(), g.size());
  ASSERT_EQ(w.edge_ids.size(), g.size());
  auto ids = w.edge_ids;
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i < ids.size(); ++i) EXPECT_EQ(ids[i], i);
  Weight total = 0;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    const Edge& e = g.edges()[w.edge_ids[i]];
    Vertex a = w.vertices[i], b = w.vertices[(i + 1) % w.vertices.size()];
    EXPECT_TRUE((e.u == a && e.v == b) || (e.u == b && e.v == a));
    total += e.w;
  }
  EXPECT_EQ(total, g.total_weight());
}

}  // namespace

TEST(Euler, Triangle) {
  MultiEdgeSet g;
  g.add(0, 1, 1);
  g.add(1, 2, 1);
  g.add(2, 0, 1);
  auto w = eulerian_tour(g);
  EXPECT_EQ(w.vertices, (std::vector<Vertex>{0, 1, 2}));
  expect_euler(g, w);
}

TEST(Euler, FigureEight) {
  MultiEdgeSet g;
  g.add(0, 1, 1);
  g.add(1, 2, 1);
  g.add(2, 0, 1);
  g.add(0, 3, 2);
  g.add(3, 4, 2);
  g.add(4, 0, 2);
  auto w = eulerian_tour(g);
  EXPECT_EQ(w.vertices.size(), 6u);
  expect_euler(g, w);
}

TEST(Euler, DoubledTree) {
  MultiEdgeSet g;
  const std::pair<Vertex, Vertex> tree[] = {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}};
  for (auto [a, b] : tree) {
    g.add(a, b, a + b);
    g.add(a, b, a + b);
  }
  auto w = eulerian_tour(g);
  EXPECT_EQ(w.vertices.size(), 10u);
  expect_euler(g, w);
}

TEST(Euler, Rejections) {
  MultiEdgeSet odd;
  odd.add(0, 1, 1);
  EXPECT_THROW(eulerian_tour(odd), Error);
  MultiEdgeSet split;
  split.add(0, 1, 1);
  split.add(0, 1, 1);
  split.add(2, 3, 1);
  split.add(2, 3, 1);
  try {
    eulerian_tour(split);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotEulerian);
  }
  EXPECT_TRUE(eulerian_tour(MultiEdgeSet{}).vertices.empty());
}

TEST(Euler, IsolatedLowVerticesAreSkipped) {
  MultiEdgeSet g;
  g.add(5, 6, 1);
  g.add(6, 7, 1);
  g.add(7, 5, 1);
  auto w = eulerian_tour(g);
  EXPECT_EQ(w.vertices.front(), 5);
  expect_euler(g, w);
}
