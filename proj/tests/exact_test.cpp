#include <gtest/gtest.h>

#include <random>

#include "neartsp/exact.hpp"
#include "support/oracles.hpp"

using namespace neartsp;

namespace {
WeightedGraph four() { return WeightedGraph::from_upper(4, std::vector<Weight>{1, 5, 1, 1, 1, 1}); }
}  // namespace

TEST(Exact, HeldKarpOnFour) {
  auto t = held_karp_tour(four());
  EXPECT_EQ(t.order, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(t.total_weight, 4);
  auto b = brute_force_tour(four());
  EXPECT_EQ(b.order, t.order);
  EXPECT_EQ(b.total_weight, 4);
}

TEST(Exact, DegenerateSubsets) {
  auto g = four();
  std::vector<Vertex> one{2};
  EXPECT_EQ(held_karp_tour(g, one).total_weight, 0);
  std::vector<Vertex> two{2, 0};
  auto t = held_karp_tour(g, two);
  EXPECT_EQ(t.total_weight, 10);
  EXPECT_EQ(t.order, (std::vector<Vertex>{0, 2}));
  std::vector<Vertex> three{0, 1, 2};
  auto u = brute_force_tour(WeightedGraph::from_upper(3, std::vector<Weight>{1, 2, 3}));
  EXPECT_EQ(u.total_weight, 6);
  EXPECT_EQ(u.order, (std::vector<Vertex>{0, 1, 2}));
}

TEST(Exact, Caps) {
  std::mt19937_64 rng(1);
  auto g = oracle::random_graph(rng, 13, 1, 5);
  try {
    brute_force_tour(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
  EXPECT_THROW(held_karp_tour(g, 12), Error);
}

TEST(Exact, HeldKarpMatchesPermutations) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 3 + trial % 7;
    auto g = oracle::random_graph(rng, n, 1, 40);
    auto t = held_karp_tour(g);
    Weight expect = oracle::tour_by_permutations(g);
    EXPECT_EQ(t.total_weight, expect);
    EXPECT_EQ(oracle::cycle(g, t.order), expect);
    EXPECT_EQ(brute_force_tour(g).total_weight, expect);
    EXPECT_EQ(brute_force_tour(g).order, t.order) << "canonical optimum differs";
  }
}

TEST(Exact, HeldKarpNineVertices) {
  std::mt19937_64 rng(37);
  auto g = oracle::random_graph(rng, 9, 1, 100);
  EXPECT_EQ(held_karp_tour(g).total_weight, oracle::tour_by_permutations(g));
}

TEST(Exact, HeldKarpOnSubset) {
  std::mt19937_64 rng(41);
  auto g = oracle::random_graph(rng, 9, 1, 30);
  std::vector<Vertex> sub{8, 1, 4, 6, 2};
  auto t = held_karp_tour(g, sub);
  EXPECT_TRUE(is_hamiltonian_on(t.order, sub));
  EXPECT_EQ(t.total_weight, oracle::tour_by_permutations(g, sub));
  EXPECT_EQ(t.order.front(), 1);
}

TEST(Exact, PathTrivialAndForced) {
  auto g = four();
  std::vector<Vertex> two{1, 3};
  auto p = held_karp_path(g, two, 3, 1);
  EXPECT_EQ(p.order, (std::vector<Vertex>{3, 1}));
  EXPECT_EQ(p.total_weight, 1);

  // A path 0-1-2-3-4 of weight-1 edges inside a clique of weight-50 edges.
  std::vector<Weight> m(25, 50);
  for (int i = 0; i < 5; ++i) m[i * 6] = 0;
  for (int i = 0; i + 1 < 5; ++i) m[i * 5 + i + 1] = m[(i + 1) * 5 + i] = 1;
  WeightedGraph line(5, m);
  std::vector<Vertex> all{4, 2, 0, 3, 1};
  auto q = held_karp_path(line, all, 0, 4);
  EXPECT_EQ(q.order, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(q.total_weight, 4);
}

TEST(Exact, PathEndpointErrors) {
  auto g = four();
  std::vector<Vertex> sub{0, 1, 2};
  try {
    held_karp_path(g, sub, 0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidEndpoints);
  }
  EXPECT_THROW(held_karp_path(g, sub, 1, 1), Error);
  std::vector<Vertex> one{2};
  EXPECT_EQ(held_karp_path(g, one, 2, 2).order, (std::vector<Vertex>{2}));
}

TEST(Exact, PathMatchesPermutations) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = oracle::random_graph(rng, 8, 1, 60);
    auto all = all_vertices(8);
    Vertex s = static_cast<Vertex>(trial % 8), t = static_cast<Vertex>((trial * 3 + 1) % 8);
    if (s == t) t = (t + 1) % 8;
    auto p = held_karp_path(g, all, s, t);
    EXPECT_EQ(p.total_weight, oracle::path_by_permutations(g, all, s, t));
    EXPECT_EQ(p.order.front(), s);
    EXPECT_EQ(p.order.back(), t);
    EXPECT_TRUE(is_hamiltonian_on(p.order, all));
  }
}
