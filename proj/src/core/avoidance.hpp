#pragma once

#include <cstdint>
#include <vector>

#include "core/counting.hpp"
#include "core/numeric.hpp"

namespace cascade {

// Upper bound on alphabet*states for materialized transition tables.
inline constexpr uint64_t kMaxTableEntries = 1ull << 26;

// A digit-wise operation with a finite internal state: a complete transition
// table, one forbidden (absorbing-in-interest) state the run must avoid, and
// the initial state.
struct StatefulOperation {
  uint32_t states = 0;            // s
  uint32_t alphabet = 0;          // N
  std::vector<uint32_t> table;    // symbol-major: table[x*states + state]
  uint32_t forbidden = 0;
  uint32_t initial = 0;

  static StatefulOperation make(uint32_t states, uint32_t alphabet,
                                std::vector<uint32_t> table, uint32_t forbidden,
                                uint32_t initial);

  uint32_t apply(uint32_t symbol, uint32_t state) const {
    return table[static_cast<size_t>(symbol) * states + state];
  }
};

// Transition-count matrix over the non-forbidden states: entry (i, j) is the
// number of symbols sending kept state i to kept state j.
struct RestrictedMatrix {
  uint32_t dim = 0;
  std::vector<uint32_t> kept;      // original state ids, ascending
  std::vector<uint64_t> entries;   // row-major dim*dim

  uint64_t at(uint32_t i, uint32_t j) const {
    return entries[static_cast<size_t>(i) * dim + j];
  }
};

RestrictedMatrix restricted_matrix(const StatefulOperation& op);

// Monic characteristic polynomial coefficients (1, c1, ..., c_dim) of the
// restricted matrix, i.e. lambda^dim + c1 lambda^(dim-1) + ... + c_dim,
// computed exactly over the integers.
struct CharPoly {
  std::vector<mpz_class> coeffs;

  uint32_t degree() const { return static_cast<uint32_t>(coeffs.size()) - 1; }
};

CharPoly char_poly(const RestrictedMatrix& m);

// a(0..length): words whose state trajectory (from op.initial) never touches
// op.forbidden, via iterated vector-matrix products on the restricted matrix.
Counts count_avoiding(const StatefulOperation& op, uint32_t length);

// Extends seed values a(0..seed-1) with the linear recurrence
// a(n) = -c1 a(n-1) - ... - c_d a(n-d) read off the characteristic polynomial.
Counts extend_by_recurrence(const CharPoly& poly, const Counts& seed,
                            uint32_t length);

// Computes the seed by matrix products and everything past it by the
// recurrence: an independent route to the same sequence.
Counts count_by_recurrence(const StatefulOperation& op, uint32_t length);

struct UniversalityReport {
  bool charpoly_equal = false;
  bool counts_equal = false;  // a(0..length) identical
  bool seeds_equal = false;   // a(0..degree-1) identical
};

// Equal characteristic polynomials plus equal seeds force equal counts; equal
// polynomials alone do not, so all three verdicts are reported.
UniversalityReport universality_equal(const StatefulOperation& a,
                                      const StatefulOperation& b,
                                      uint32_t length);

// Spectral data of a 2x2 restricted matrix (three live states): eigenvalues,
// discriminant and the coupling trace/(2*sqrt(det)). NotApplicable when the
// restricted dimension is not 2 or the eigenvalues are not real.
SpectralData spectral_data_restricted(const StatefulOperation& op);

// For a two-state operation, sorts each symbol into gen/prop/kill by its
// column (T(0), T(1)): (1,1) gen, (0,1) prop, (0,0) kill. A (1,0) column is a
// state negation and cannot be classified (NegationPresent); more than two
// states raises NotBinaryState. The forbidden marker plays no role here.
Gpk classify_gpk(const StatefulOperation& op);

// Three-state encoding of the cascade-free constraint as avoidance: states
// {rest, set, dead}, forbidden = dead. gen sets from any live state; prop
// keeps rest but sends set to dead; kill clears. Its restricted matrix is
// exactly the 2x2 transfer matrix, so counts match count_cascade_free.
StatefulOperation lift_gpk(const Gpk& gpk);

}  // namespace cascade
