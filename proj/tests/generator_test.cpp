#include <gtest/gtest.h>

#include "neartsp/generator.hpp"
#include "neartsp/instance_io.hpp"

using namespace neartsp;

TEST(Rng, UniformStaysInRange) {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    auto x = rng.uniform(-3, 4);
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 4);
  }
}

TEST(Rng, StreamIsFixed) {
  // mt19937_64 with the default seed 5489 has this as its 10000th output.
  std::mt19937_64 ref;
  ref.discard(9999);
  EXPECT_EQ(ref(), 9981545732273789042ULL);
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.uniform(1, 100), b.uniform(1, 100));
}

TEST(Generator, RandomMetricIsMetricAndDeterministic) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GeneratorSpec s{GeneratorKind::RandomMetric, 8, 0, seed, 1, 100};
    auto g = generate(s);
    EXPECT_TRUE(is_metric(g));
    EXPECT_TRUE(bad_vertices_p(g).bad.empty());
    EXPECT_TRUE(min_violating_set(g).bad.empty());
  }
  GeneratorSpec s{GeneratorKind::RandomMetric, 5, 0, 1, 1, 100};
  EXPECT_EQ(format_instance(generate(s)), format_instance(generate(s)));
}

TEST(Generator, PlantedP) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (std::size_t p : {3u, 4u, 5u, 10u}) {
      GeneratorSpec s{GeneratorKind::PlantedP, 10, p, seed, 1, 100};
      auto g = generate(s);
      EXPECT_EQ(bad_vertices_p(g).bad.size(), p) << "seed " << seed;
    }
  }
}

TEST(Generator, PlantedQ) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (std::size_t q : {1u, 2u, 3u}) {
      GeneratorSpec s{GeneratorKind::PlantedQ, 9, q, seed, 1, 100};
      auto g = generate(s);
      EXPECT_EQ(min_violating_set(g).bad.size(), q) << "seed " << seed;
    }
  }
}

TEST(Generator, TargetZeroIsPlainMetric) {
  GeneratorSpec s{GeneratorKind::PlantedQ, 7, 0, 3, 1, 100};
  GeneratorSpec m{GeneratorKind::RandomMetric, 7, 0, 3, 1, 100};
  EXPECT_EQ(generate(s), generate(m));
}

TEST(Generator, RejectsBadSpecs) {
  auto kind_of = [](GeneratorSpec s) {
    try {
      generate(s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvariantViolation;
  };
  EXPECT_EQ(kind_of({GeneratorKind::PlantedP, 8, 2, 1, 1, 100}), ErrorKind::GenerationFailed);
  EXPECT_EQ(kind_of({GeneratorKind::PlantedQ, 8, 5, 1, 1, 100}), ErrorKind::GenerationFailed);
  EXPECT_EQ(kind_of({GeneratorKind::RandomMetric, 2, 0, 1, 1, 100}), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of({GeneratorKind::RandomMetric, 5, 0, 1, 0, 100}), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of({GeneratorKind::PlantedP, 5, 6, 1, 1, 100}), ErrorKind::InvalidArgument);
  EXPECT_EQ(parse_generator_kind("planted-q"), GeneratorKind::PlantedQ);
  EXPECT_THROW(parse_generator_kind("nope"), Error);
}
