#pragma once

#include <string>
#include <string_view>

#include "neartsp/alg_p.hpp"
#include "neartsp/alg_q.hpp"
#include "neartsp/error.hpp"
#include "neartsp/exact.hpp"
#include "neartsp/graph.hpp"
#include "neartsp/metric.hpp"
#include "neartsp/solve_report.hpp"

namespace neartsp {

enum class Algorithm { Alg1, Alg2, Alg4, Christofides, Exact };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Alg1: return "alg1";
    case Algorithm::Alg2: return "alg2";
    case Algorithm::Alg4: return "alg4";
    case Algorithm::Christofides: return "christofides";
    case Algorithm::Exact: return "exact";
  }
  return "?";
}

inline Algorithm parse_algorithm(std::string_view s) {
  for (Algorithm a : {Algorithm::Alg1, Algorithm::Alg2, Algorithm::Alg4, Algorithm::Christofides, Algorithm::Exact})
    if (to_string(a) == s) return a;
  fail(ErrorKind::InvalidArgument, "unknown algorithm '" + std::string(s) + "'");
}

/// Minimum violating set limited to `cap` vertices; a larger one is CapExceeded.
inline VertexPartition violating_set_within(const WeightedGraph& g, std::size_t cap) {
  try {
    return min_violating_set(g, cap);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    fail(ErrorKind::CapExceeded, "minimum violating set exceeds cap " + std::to_string(cap));
  }
}

/// Runs one algorithm, computing the vertex partition it needs.
inline SolveReport solve(const WeightedGraph& g, Algorithm a, const SolveOptions& opt = {}) {
  switch (a) {
    case Algorithm::Alg1: return alg1(g, bad_vertices_p(g), opt);
    case Algorithm::Alg2: return alg2(g, bad_vertices_p(g), opt);
    case Algorithm::Alg4: return alg4(g, violating_set_within(g, opt.chain_cap_q), opt);
    case Algorithm::Christofides:
    case Algorithm::Exact: {
      Stopwatch clock;
      SolveReport r;
      r.algorithm = std::string(to_string(a));
      r.tour = a == Algorithm::Exact ? held_karp_tour(g, opt.held_karp_cap) : christofides(g);
      r.weight = r.tour.total_weight;
      r.wall_time_ms = clock.elapsed_ms();
      return r;
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown algorithm");
}

/// Fills in the optimum: exhaustive search up to its cap, the DP beyond.
inline void attach_oracle(SolveReport& r, const WeightedGraph& g, std::size_t held_karp_cap = kHeldKarpCap) {
  r.opt = g.size() <= kBruteForceCap ? brute_force_tour(g).total_weight : held_karp_tour(g, held_karp_cap).total_weight;
}

}  // namespace neartsp
