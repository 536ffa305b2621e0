#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/numeric.hpp"

namespace cascade {

// Symmetric two-state chains (equal gen and kill weight) keyed by the memory
// parameter mu in [0, 1): dispersion limit D_inf(mu) = (1 + mu) / (2 (1 - mu)).
mpq_class symmetric_dispersion_limit(const mpq_class& mu);

// Dispersion of the position-k marginal from a clear start:
// d_k = D_inf(mu) * (1 - mu^k). Requires k >= 1.
mpq_class marginal_dispersion(const mpq_class& mu, uint32_t k);

// Dispersion of the length-L count from a clear start, as the
// (1 - mu^k)-weighted combination of the marginals:
// D(L) = D_inf * sum_k (1 - mu^k)^2 / sum_k (1 - mu^k). Requires L >= 1.
mpq_class symmetric_dispersion(const mpq_class& mu, uint32_t length);

struct PoissonRoot {
  uint32_t length = 0;
  double mu_star = 0;   // solves D(length, mu) = 1
  double residual = 0;  // |D(mu_star) - 1|, re-evaluated exactly at mu_star
  double tol = 0;
};

// Bisection for the unique mu in (1/3, 1) with D(length, mu) = 1. Every probe
// evaluates D exactly at the dyadic rational of the double. NoInteriorRoot for
// length < 2 (D(1, mu) = (1+mu)/2 < 1 on the whole interval).
PoissonRoot poisson_root(uint32_t length, double tol = 1e-12);

struct ExpansionCheck {
  mpq_class exact;        // D(length, mu)
  mpq_class first_order;  // D_inf * (1 - mu / (length (1-mu)(1+mu)))
  mpq_class residual;     // exact - first_order, order 1/length^2
};

ExpansionCheck asymptotic_expansion_check(const mpq_class& mu, uint32_t length);

struct ScanReport {
  uint64_t checks = 0;
  std::vector<std::string> failures;

  bool all_pass() const { return failures.empty(); }
};

// For each mu in the grid (all strictly inside (0,1)) verifies, exactly:
// d_k strictly increasing and below D_inf, D(L) strictly increasing in L,
// D(L) < d_(L+1) <= D_inf, and the step identity
// d_(L+2) - d_(L+1) = mu^(L+1) (1+mu) / 2.
ScanReport monotonicity_scan(const std::vector<mpq_class>& grid,
                             uint32_t length_max);

}  // namespace cascade
