#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "neartsp/chains.hpp"
#include "neartsp/exact.hpp"
#include "neartsp/structures.hpp"

namespace neartsp {

struct SolveOptions {
  std::size_t threads = 1;
  std::size_t held_karp_cap = kHeldKarpCap;
  std::size_t chain_cap_p = kChainCapP;
  std::size_t chain_cap_q = kChainCapQ;
};

/// Guess counters for one nesting level of the q-algorithm.
struct LevelStats {
  std::uint64_t evaluated = 0;
  std::uint64_t skipped = 0;
};

struct SolveReport {
  std::string algorithm;
  Tour tour;
  Weight weight = 0;
  std::optional<Weight> opt;
  std::int64_t p = -1;  // -1 when not computed
  std::int64_t q = -1;
  std::uint64_t guesses_evaluated = 0;
  std::uint64_t guesses_skipped = 0;
  std::int64_t wall_time_ms = 0;
  // Per-level counts of the q-algorithm (chains, limbs, connect); not serialized.
  std::vector<LevelStats> levels;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Worker count from NEARTSP_THREADS, or `fallback` when unset or invalid.
inline std::size_t threads_from_env(std::size_t fallback = 1) {
  const char* s = std::getenv("NEARTSP_THREADS");
  if (s == nullptr || *s == '\0') return fallback;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 1) return fallback;
  return static_cast<std::size_t>(v);
}

}  // namespace neartsp
