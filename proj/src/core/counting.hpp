#pragma once

#include <array>
#include <cstdint>

#include "core/numeric.hpp"

namespace cascade {

// Per-class population bound: keeps N and N^2 - 4*g*t inside signed 64-bit
// range at the C boundary (the core itself computes with mpz).
inline constexpr uint64_t kMaxClassSize = 1'000'000'000;

// A binary-state digit operation described only by how many symbols set the
// state (gen), pass it through (prop), and clear it (kill).
struct Gpk {
  uint64_t gen = 0;
  uint64_t prop = 0;
  uint64_t kill = 0;

  Gpk(uint64_t g, uint64_t t, uint64_t k);

  uint64_t alphabet() const { return gen + prop + kill; }       // N
  uint64_t determinant() const { return gen * prop; }           // product invariant
  mpz_class discriminant() const;                               // N^2 - 4*gen*prop
  bool degenerate() const { return discriminant() == 0; }       // gen == prop, kill == 0
};

// 2x2 transfer matrix over states (rest, set): entry (i, j) counts the symbols
// sending state i to state j without a set state feeding a pass-through.
struct TransferMatrix2 {
  std::array<std::array<uint64_t, 2>, 2> entries{};

  uint64_t trace() const { return entries[0][0] + entries[1][1]; }
  mpz_class determinant() const;
};

TransferMatrix2 build_transfer_matrix(const Gpk& gpk);

// a(0..length): number of length-L words that never feed a set state into a
// pass-through symbol, via the two-term integer recurrence
// a(L) = N*a(L-1) - gen*prop*a(L-2).
Counts count_cascade_free(const Gpk& gpk, uint32_t length);

// Same coefficients read off the series expansion of 1 / (1 - N z + gen*prop z^2),
// computed by exact power-series reciprocation (an independent route).
Counts gf_coefficients(const Gpk& gpk, uint32_t length);

// a(length) / N^length as an exact rational.
mpq_class cascade_free_density(const Gpk& gpk, uint32_t length);

struct SpectralData {
  mpz_class trace;         // N
  mpz_class determinant;   // gen*prop
  mpz_class discriminant;  // N^2 - 4*gen*prop
  double lambda_plus = 0;  // larger eigenvalue of the transfer matrix
  double lambda_minus = 0;
  double coupling = 0;     // N / (2*sqrt(gen*prop)); +inf when gen*prop == 0
  bool degenerate = false; // discriminant == 0 (repeated eigenvalue)
  bool infinite_coupling = false;
};

SpectralData spectral_data(const Gpk& gpk);

// Second-kind Chebyshev polynomial U_n(x) by the forward recurrence
// U_0 = 1, U_1 = 2x, U_n = 2x U_{n-1} - U_{n-2}.
double chebyshev_u(uint32_t n, double x);

struct ChebyshevReport {
  double max_rel_error = 0;
  bool pass = false;
};

// Cross-checks a(L) against (sqrt(gen*prop))^L * U_L(coupling) for all
// L' <= length; requires gen*prop > 0 (NotApplicable otherwise).
ChebyshevReport verify_chebyshev_representation(const Gpk& gpk, uint32_t length,
                                                double tolerance);

}  // namespace cascade
