#include <gtest/gtest.h>

#include <set>

#include "neartsp/chains.hpp"
#include "support/oracles.hpp"

using namespace neartsp;

namespace {
std::vector<Vertex> first(std::size_t p) {
  std::vector<Vertex> v(p);
  for (std::size_t i = 0; i < p; ++i) v[i] = static_cast<Vertex>(i);
  return v;
}
}  // namespace

TEST(BadChains, CountsMatchPathPartitionOracle) {
  const std::size_t frozen[] = {1, 2, 7, 34};
  for (std::size_t p = 1; p <= 4; ++p) {
    EXPECT_EQ(oracle::count_path_partitions(p), frozen[p - 1]);
    EXPECT_EQ(all_bad_chains(first(p)).size(), frozen[p - 1]) << "p = " << p;
  }
  EXPECT_EQ(all_bad_chains(first(5)).size(), oracle::count_path_partitions(5));
  EXPECT_EQ(all_bad_chains(first(6)).size(), oracle::count_path_partitions(6));
}

TEST(BadChains, SmallCases) {
  auto one = all_bad_chains(std::vector<Vertex>{4});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].chains, (std::vector<Chain>{{4}}));
  auto two = all_bad_chains(std::vector<Vertex>{7, 2});
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].chains, (std::vector<Chain>{{2}, {7}}));
  EXPECT_EQ(two[1].chains, (std::vector<Chain>{{2, 7}}));
  EXPECT_TRUE(all_bad_chains(std::vector<Vertex>{}).empty());
}

TEST(BadChains, EveryGuessIsAValidSplit) {
  auto bad = std::vector<Vertex>{1, 3, 4, 8, 9};
  std::set<std::vector<Chain>> seen;
  for (const auto& cs : all_bad_chains(bad)) {
    std::vector<Vertex> covered;
    for (const auto& c : cs.chains) {
      EXPECT_LE(c.front(), c.back());
      covered.insert(covered.end(), c.begin(), c.end());
    }
    std::sort(covered.begin(), covered.end());
    EXPECT_EQ(covered, bad);
    auto key = cs.chains;
    std::sort(key.begin(), key.end());
    EXPECT_TRUE(seen.insert(key).second);
  }
}

TEST(BadChains, CapExceeded) {
  try {
    all_bad_chains(first(8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(OrderedChains, SmallCounts) {
  EXPECT_TRUE(enumerate_ordered_chains(std::vector<Vertex>{}).empty());
  auto one = enumerate_ordered_chains(std::vector<Vertex>{3});
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0].anchor, (std::vector<int>{1}));
  EXPECT_EQ(one[1].anchor, (std::vector<int>{2}));
  EXPECT_EQ(oracle::count_ordered_chain_guesses(1), 2u);
  EXPECT_EQ(oracle::count_ordered_chain_guesses(2), 5u);
  EXPECT_EQ(enumerate_ordered_chains(first(2)).size(), 5u);
}

TEST(OrderedChains, CountsMatchCyclicWordOracle) {
  for (std::size_t q = 1; q <= 5; ++q)
    EXPECT_EQ(enumerate_ordered_chains(first(q)).size(), oracle::count_ordered_chain_guesses(q)) << "q = " << q;
}

TEST(OrderedChains, GuessShape) {
  for (const auto& g : enumerate_ordered_chains(first(4))) {
    ASSERT_EQ(g.anchor.size(), g.chains.size());
    for (int f : g.anchor) EXPECT_TRUE(f == 1 || f == 2);
    EXPECT_EQ(std::find(g.chains[0].begin(), g.chains[0].end(), 0) != g.chains[0].end(), true);
    std::vector<Vertex> covered;
    for (const auto& c : g.chains) covered.insert(covered.end(), c.begin(), c.end());
    std::sort(covered.begin(), covered.end());
    EXPECT_EQ(covered, first(4));
  }
}
