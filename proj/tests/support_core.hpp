#pragma once

// Helpers for tests that link the C++ core directly: pretty-printers for GMP
// types, an error-code assertion macro, and small independent oracles used to
// cross-check the library's closed forms.
#include "support.hpp"

#include <array>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "core/counting.hpp"
#include "core/error.hpp"
#include "core/markov.hpp"
#include "core/numeric.hpp"
#include "core/oracle.hpp"

namespace doctest {

template <>
struct StringMaker<mpz_class> {
  static String convert(const mpz_class& value) {
    return value.get_str().c_str();
  }
};

template <>
struct StringMaker<mpq_class> {
  static String convert(const mpq_class& value) {
    return value.get_str().c_str();
  }
};

template <>
struct StringMaker<cascade::ErrorCode> {
  static String convert(cascade::ErrorCode code) {
    return cascade::error_code_name(code);
  }
};

}  // namespace doctest

// Asserts that evaluating `expr` throws cascade::Error carrying exactly
// `wanted`.
#define CHECK_FAILS_WITH(expr, wanted)                            \
  do {                                                            \
    bool thrown_ = false;                                         \
    try {                                                         \
      (void)(expr);                                               \
    } catch (const cascade::Error& caught_) {                     \
      thrown_ = true;                                             \
      CHECK(caught_.code() == (wanted));                          \
    }                                                             \
    CHECK_MESSAGE(thrown_, #expr " did not raise cascade::Error"); \
  } while (0)

namespace testsupport {

// All (gen, prop, kill) class splits with 1 <= gen+prop+kill <= max_alphabet.
inline std::vector<cascade::Gpk> compositions_up_to(uint64_t max_alphabet) {
  std::vector<cascade::Gpk> out;
  for (uint64_t n = 1; n <= max_alphabet; ++n) {
    for (uint64_t g = 0; g <= n; ++g) {
      for (uint64_t t = 0; g + t <= n; ++t) {
        out.emplace_back(g, t, n - g - t);
      }
    }
  }
  return out;
}

// p-adic valuation of the binomial coefficient C(m+n, m) by the floor-sum
// formula: sum_i floor((m+n)/p^i) - floor(m/p^i) - floor(n/p^i).
inline uint64_t binomial_valuation(const mpz_class& m, const mpz_class& n,
                                   uint64_t p) {
  const mpz_class total = m + n;
  mpz_class power = p;
  uint64_t valuation = 0;
  while (power <= total) {
    const mpz_class term = total / power - m / power - n / power;
    valuation += term.get_ui();
    power *= static_cast<unsigned long>(p);
  }
  return valuation;
}

// Deterministic wide integer built from the counter generator, up to
// 64*words bits.
inline mpz_class random_mpz(uint64_t seed, uint64_t stream, uint64_t index,
                            uint32_t words) {
  mpz_class value = 0;
  for (uint32_t w = 0; w < words; ++w) {
    value <<= 64;
    value += static_cast<unsigned long>(
        cascade::counter_rng(seed, stream, index * words + w));
  }
  return value;
}

struct DpMoments {
  mpq_class mean;
  mpq_class variance;
  mpq_class dispersion;
};

// Independent moment oracle: evolves the exact joint distribution of
// (current state, set-position count) and reads off the first two moments.
// O(length^2) rational work, so keep length modest.
inline DpMoments dp_moments(const cascade::Gpk& gpk, uint32_t length,
                            bool from_clear_state) {
  const unsigned long n = static_cast<unsigned long>(gpk.alphabet());
  const mpq_class clear_to_set = cascade::make_q(gpk.gen, n);
  const mpq_class clear_to_clear = cascade::make_q(gpk.prop + gpk.kill, n);
  const mpq_class set_to_set = cascade::make_q(gpk.gen + gpk.prop, n);
  const mpq_class set_to_clear = cascade::make_q(gpk.kill, n);

  // dist[v] = {P(count = v, state clear), P(count = v, state set)}
  std::vector<std::array<mpq_class, 2>> dist(length + 1, {mpq_class(0), mpq_class(0)});
  if (from_clear_state) {
    dist[0][0] = 1;
  } else {
    const mpz_class mixing = mpz_class(gpk.gen) + mpz_class(gpk.kill);
    dist[0][0] = cascade::make_q(gpk.kill, mixing);
    dist[0][1] = cascade::make_q(gpk.gen, mixing);
  }
  for (uint32_t step = 1; step <= length; ++step) {
    std::vector<std::array<mpq_class, 2>> next(length + 1,
                                               {mpq_class(0), mpq_class(0)});
    for (uint32_t v = 0; v < step; ++v) {
      next[v][0] += dist[v][0] * clear_to_clear + dist[v][1] * set_to_clear;
      next[v + 1][1] += dist[v][0] * clear_to_set + dist[v][1] * set_to_set;
    }
    dist.swap(next);
  }
  mpq_class mean = 0, second = 0;
  for (uint32_t v = 0; v <= length; ++v) {
    const mpq_class mass = dist[v][0] + dist[v][1];
    mean += v * mass;
    second += mpq_class(v) * v * mass;
  }
  DpMoments out;
  out.mean = mean;
  out.variance = second - mean * mean;
  out.dispersion = mean == 0 ? mpq_class(0) : mpq_class(out.variance / mean);
  return out;
}

}  // namespace testsupport
