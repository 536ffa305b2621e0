#pragma once

#include <array>
#include <cstdint>

#include "core/counting.hpp"
#include "core/numeric.hpp"

namespace cascade {

// Two-state chain of the indicator "state is set" under uniform random
// symbols: stays set with probability (gen+prop)/N, becomes set from clear
// with probability gen/N.
struct MarkovChain {
  mpq_class mu;   // prop / N, the memory parameter
  mpq_class pi0;  // stationary P(clear) = kill / (gen + kill)
  mpq_class pi1;  // stationary P(set)  = gen / (gen + kill)
  std::array<std::array<mpq_class, 2>, 2> rows;  // transition matrix
  double correlation_length = 0;  // 1 / ln(N / prop); 0 when prop == 0
};

// DegenerateChain when gen + kill == 0 (every symbol passes through and the
// state never mixes).
MarkovChain markov_chain(const Gpk& gpk);

// Stationary lag-m autocorrelation of the indicator: (prop / N)^m.
mpq_class autocorrelation(const Gpk& gpk, uint32_t lag);

struct PropagationRates {
  mpq_class per_position;  // E[received pass-throughs] / L = prop*gen / (N (gen+kill))
  mpq_class ratio;         // fraction of pass-throughs that receive a set state
};

PropagationRates expected_propagation(const Gpk& gpk);

enum class Regime { Stationary, Transient };

struct MomentReport {
  mpq_class mean;
  mpq_class variance;
  mpq_class dispersion;  // variance / mean
  Regime regime = Regime::Stationary;
};

// Moments of the number of set positions among L draws with the chain started
// in its stationary law. DegenerateDistribution when the mean vanishes.
MomentReport stationary_moments(const Gpk& gpk, uint32_t length);

// Same, with the chain started from the clear state (how runs actually begin).
MomentReport transient_moments(const Gpk& gpk, uint32_t length);

// Limit of dispersion as L grows: pi0 (1 + mu) / (1 - mu)
//                                = kill (gen + kill + 2 prop) / (gen + kill)^2.
mpq_class asymptotic_dispersion(const Gpk& gpk);

}  // namespace cascade
