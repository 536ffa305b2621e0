#pragma once

#include <cstdint>

#include "core/avoidance.hpp"
#include "core/counting.hpp"

namespace cascade {

// Carry state when adding two independent base-p digits:
// gen = p(p-1)/2 pairs overflow outright, prop = p pairs sum to p-1,
// kill = the rest. N = p^2.
Gpk addition_instance(uint64_t base);

// Carry state when doubling a base-p digit: digit d generates iff 2d >= p,
// passes the carry through iff 2d = p-1 (possible only for odd p), else kills.
Gpk doubling_instance(uint64_t base);

// The same two instances as explicit two-state tables (carry in {0,1}),
// suitable for trajectory simulation and classification. Symbol (a, b) of the
// addition table is index a*p + b.
StatefulOperation addition_operation(uint64_t base);
StatefulOperation doubling_operation(uint64_t base);

// Adding three base-3 digits: carry states {0,1,2}, forbidden carry 2.
// Symbol (a, b, c) has index 9a + 3b + c.
StatefulOperation ternary_three_sum();

// Adding four binary digits: carry states {0,..,3}, forbidden carry 3.
// Symbol (a, b, c, d) has index 8a + 4b + 2c + d.
StatefulOperation binary_four_sum();

// Mod-p running sum of digit pairs ("sediment" layer): states are residues,
// transition sigma -> sigma + a + b (mod p). The instance is state-transitive,
// so the avoidance count (p(p-1))^L does not depend on the forbidden residue;
// by default residue p-1 is forbidden and the run starts at 0.
StatefulOperation sediment_instance(uint64_t base);
StatefulOperation sediment_instance(uint64_t base, uint32_t forbidden,
                                    uint32_t initial);

struct ScalingLawReport {
  uint64_t base = 0;
  uint32_t length = 0;
  Counts carry_counts;     // addition instance
  Counts doubling_counts;  // doubling instance
  bool all_match = false;  // carry(L) == p^L * doubling(L) for all L <= length
  std::vector<uint32_t> mismatches;
};

// Checks carry(L) == p^L * doubling(L) exactly for L = 0..length. Holds for
// every odd base; fails for even bases (the pass-through class is empty).
ScalingLawReport scaling_law_check(uint64_t base, uint32_t length);

// F(2L+2) by fast doubling: equals the base-3 doubling count a(L).
mpz_class fibonacci_bisection(uint32_t length);

struct KummerReport {
  uint64_t total = 0;      // carries when adding m + n in base p
  uint64_t generated = 0;  // digit pair alone overflows
  uint64_t propagated = 0; // digit pair sums to p-1 and receives a carry
};

// Carry census of the base-p addition m + n; total equals the p-adic
// valuation of the binomial coefficient C(m+n, m).
KummerReport kummer_carry_count(const mpz_class& m, const mpz_class& n,
                                uint64_t prime);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

}  // namespace cascade
