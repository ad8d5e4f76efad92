#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "neartsp/error.hpp"
#include "neartsp/generator.hpp"
#include "neartsp/parallel.hpp"
#include "neartsp/report.hpp"
#include "neartsp/solve.hpp"

namespace neartsp {

/// A family of seeded instances and the algorithms run on each.
struct Suite {
  std::string name;
  GeneratorKind kind;
  std::size_t n_lo, n_hi;
  std::size_t target_lo, target_hi;
  std::vector<Algorithm> algorithms;
};

inline Suite suite_by_name(std::string_view name) {
  if (name == "metric") return {"metric", GeneratorKind::RandomMetric, 6, 11, 0, 0, {Algorithm::Christofides}};
  if (name == "p") return {"p", GeneratorKind::PlantedP, 8, 12, 3, 5, {Algorithm::Alg1, Algorithm::Alg2}};
  if (name == "q") return {"q", GeneratorKind::PlantedQ, 8, 10, 1, 3, {Algorithm::Alg4}};
  fail(ErrorKind::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

struct BenchInstance {
  std::string id;
  GeneratorSpec spec;
  WeightedGraph graph;
};

/// Instance i draws n and the target from a stream seeded with
/// splitmix64(seed + i); a planted instance that cannot be generated moves
/// on to the next derived seed.
inline BenchInstance bench_instance(const Suite& suite, std::uint64_t seed, std::size_t i) {
  std::uint64_t s = splitmix64(seed + i);
  for (int attempt = 0;; ++attempt) {
    Rng rng(s);
    GeneratorSpec spec;
    spec.kind = suite.kind;
    spec.n = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(suite.n_lo), static_cast<std::int64_t>(suite.n_hi)));
    spec.target = static_cast<std::size_t>(
        rng.uniform(static_cast<std::int64_t>(suite.target_lo), static_cast<std::int64_t>(suite.target_hi)));
    spec.seed = rng.next();
    try {
      return {suite.name + "-" + std::to_string(i), spec, generate(spec)};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GenerationFailed || attempt >= kGeneratorRetries) throw;
      s = splitmix64(s);
    }
  }
}

struct BenchConfig {
  std::string suite = "metric";
  std::size_t count = 10;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  bool oracle = true;
  std::vector<Algorithm> algorithms;  // empty: the suite's own
  SolveOptions solve;
};

/// One row per (instance, algorithm), in instance order. p and q are the
/// instance's parameters, whichever algorithm ran.
inline std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  const Suite suite = suite_by_name(cfg.suite);
  const auto algs = cfg.algorithms.empty() ? suite.algorithms : cfg.algorithms;
  std::vector<std::vector<BenchRow>> per(cfg.count);
  striped_for(cfg.count, cfg.threads, [&](std::size_t, std::size_t i) {
    auto inst = bench_instance(suite, cfg.seed, i);
    const WeightedGraph& g = inst.graph;
    const auto p = static_cast<std::int64_t>(bad_vertices_p(g).bad.size());
    const auto q = static_cast<std::int64_t>(min_violating_set(g).bad.size());
    std::optional<Weight> opt;
    if (cfg.oracle) opt = brute_force_tour(g, kBruteForceCap).total_weight;
    for (Algorithm a : algs) {
      SolveReport r = solve(g, a, cfg.solve);
      r.opt = opt;
      per[i].push_back(BenchRow{inst.id, g.size(), p, q, r.algorithm, r.weight, r.opt, ratio_text(r),
                                r.guesses_evaluated, r.guesses_skipped, r.wall_time_ms});
    }
  });
  std::vector<BenchRow> rows;
  for (auto& v : per) rows.insert(rows.end(), v.begin(), v.end());
  return rows;
}

}  // namespace neartsp
