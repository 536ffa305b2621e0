#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace cascade {

using Counts = std::vector<mpz_class>;

inline mpz_class pow_z(const mpz_class& base, uint64_t exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline mpq_class pow_q(const mpq_class& base, uint64_t exponent) {
  mpq_class out;
  mpz_pow_ui(out.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(out.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

inline mpq_class make_q(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "rational with zero denominator");
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

inline std::string to_string(const mpz_class& v) { return v.get_str(); }
inline std::string to_string(const mpq_class& v) { return v.get_str(); }
inline double to_double(const mpq_class& v) { return v.get_d(); }

// base^exponent in u64, or nullopt-style overflow flag.
inline bool checked_pow_u64(uint64_t base, uint32_t exponent, uint64_t limit,
                            uint64_t* out) {
  uint64_t acc = 1;
  for (uint32_t i = 0; i < exponent; ++i) {
    if (base != 0 && acc > limit / base) return false;
    acc *= base;
    if (acc > limit) return false;
  }
  *out = acc;
  return true;
}

}  // namespace cascade
