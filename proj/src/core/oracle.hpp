#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/avoidance.hpp"
#include "core/counting.hpp"

namespace cascade {

inline constexpr uint64_t kDefaultBudget = 10'000'000;

struct TrajectoryStats {
  std::vector<uint32_t> states;  // sigma_0 .. sigma_L (initial state included)
  uint64_t ones = 0;             // positions k >= 1 with sigma_k == 1
  // Only meaningful for two-state operations without negation symbols:
  uint64_t gen_count = 0;   // symbols whose column is (1,1)
  uint64_t prop_star = 0;   // (0,1) symbols that receive state 1
};

TrajectoryStats simulate_trajectory(const StatefulOperation& op,
                                    std::span<const uint32_t> word);

// Exhaustive enumeration of all N^L words in lexicographic order, counting
// those with no pass-through symbol receiving a set state. BudgetExceeded
// when N^L > budget (budget 0 means the default).
mpz_class brute_count_cascade_free(const Gpk& gpk, uint32_t length,
                                   uint64_t budget = kDefaultBudget);

// Same enumeration, counting words with no gen symbol immediately followed by
// a prop symbol: an independent formulation of the same language.
mpz_class brute_count_adjacency(const Gpk& gpk, uint32_t length,
                                uint64_t budget = kDefaultBudget);

// Exhaustive count of words whose trajectory avoids the forbidden state.
mpz_class brute_count_avoiding(const StatefulOperation& op, uint32_t length,
                               uint64_t budget = kDefaultBudget);

// Counter-based generator: the value depends only on (seed, stream, counter),
// so sample i / position k of a run is reproducible in isolation.
uint64_t counter_rng(uint64_t seed, uint64_t stream, uint64_t counter);

struct MonteCarloEstimate {
  double mean = 0;
  double variance = 0;    // unbiased sample variance
  double dispersion = 0;  // variance / mean
  double mean_se = 0;     // jackknife standard errors
  double variance_se = 0;
  double dispersion_se = 0;
  uint64_t samples = 0;
};

// Samples uniform words, counts set states per word, and reports
// mean/variance/dispersion with leave-one-out (jackknife) standard errors.
// DegenerateDistribution when every sampled count is zero.
MonteCarloEstimate monte_carlo_dispersion(const Gpk& gpk, uint32_t length,
                                          uint64_t samples, uint64_t seed);

}  // namespace cascade
