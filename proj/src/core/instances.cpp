#include "core/instances.hpp"

namespace cascade {

namespace {

void require_base(uint64_t base, uint64_t max_base) {
  if (base < 2) fail(ErrorCode::InvalidBase, "base must be at least 2");
  if (base > max_base) {
    fail(ErrorCode::InvalidBase,
         "base exceeds supported bound " + std::to_string(max_base));
  }
}

}  // namespace

Gpk addition_instance(uint64_t base) {
  // g = p(p-1)/2 <= kMaxClassSize caps the base at 44720.
  require_base(base, 44720);
  const uint64_t g = base * (base - 1) / 2;
  return Gpk(g, base, base * base - g - base);
}

Gpk doubling_instance(uint64_t base) {
  require_base(base, kMaxClassSize);
  const uint64_t g = base / 2;          // digits with 2d >= base
  const uint64_t t = base % 2;          // digit (base-1)/2 when base is odd
  return Gpk(g, t, base - g - t);
}

StatefulOperation addition_operation(uint64_t base) {
  require_base(base, 256);
  const uint32_t p = static_cast<uint32_t>(base);
  std::vector<uint32_t> table(static_cast<size_t>(p) * p * 2);
  for (uint32_t a = 0; a < p; ++a) {
    for (uint32_t b = 0; b < p; ++b) {
      const size_t x = static_cast<size_t>(a) * p + b;
      table[x * 2 + 0] = (a + b) / p;
      table[x * 2 + 1] = (a + b + 1) / p;
    }
  }
  return StatefulOperation::make(2, p * p, std::move(table), 1, 0);
}

StatefulOperation doubling_operation(uint64_t base) {
  require_base(base, 65536);
  const uint32_t p = static_cast<uint32_t>(base);
  std::vector<uint32_t> table(static_cast<size_t>(p) * 2);
  for (uint32_t d = 0; d < p; ++d) {
    table[d * 2 + 0] = (2 * d) / p;
    table[d * 2 + 1] = (2 * d + 1) / p;
  }
  return StatefulOperation::make(2, p, std::move(table), 1, 0);
}

StatefulOperation ternary_three_sum() {
  std::vector<uint32_t> table(27 * 3);
  for (uint32_t a = 0; a < 3; ++a) {
    for (uint32_t b = 0; b < 3; ++b) {
      for (uint32_t c = 0; c < 3; ++c) {
        const size_t x = static_cast<size_t>(9) * a + 3 * b + c;
        for (uint32_t carry = 0; carry < 3; ++carry) {
          table[x * 3 + carry] = (a + b + c + carry) / 3;
        }
      }
    }
  }
  return StatefulOperation::make(3, 27, std::move(table), 2, 0);
}

StatefulOperation binary_four_sum() {
  std::vector<uint32_t> table(16 * 4);
  for (uint32_t x = 0; x < 16; ++x) {
    const uint32_t digit_sum =
        (x & 1) + ((x >> 1) & 1) + ((x >> 2) & 1) + ((x >> 3) & 1);
    for (uint32_t carry = 0; carry < 4; ++carry) {
      table[x * 4 + carry] = (digit_sum + carry) / 2;
    }
  }
  return StatefulOperation::make(4, 16, std::move(table), 3, 0);
}

StatefulOperation sediment_instance(uint64_t base, uint32_t forbidden,
                                    uint32_t initial) {
  require_base(base, 64);
  const uint32_t p = static_cast<uint32_t>(base);
  std::vector<uint32_t> table(static_cast<size_t>(p) * p * p);
  for (uint32_t a = 0; a < p; ++a) {
    for (uint32_t b = 0; b < p; ++b) {
      const size_t x = static_cast<size_t>(a) * p + b;
      for (uint32_t s = 0; s < p; ++s) {
        table[x * p + s] = (s + a + b) % p;
      }
    }
  }
  return StatefulOperation::make(p, p * p, std::move(table), forbidden, initial);
}

StatefulOperation sediment_instance(uint64_t base) {
  require_base(base, 64);
  return sediment_instance(base, static_cast<uint32_t>(base - 1), 0);
}

ScalingLawReport scaling_law_check(uint64_t base, uint32_t length) {
  ScalingLawReport report;
  report.base = base;
  report.length = length;
  report.carry_counts = count_cascade_free(addition_instance(base), length);
  report.doubling_counts = count_cascade_free(doubling_instance(base), length);
  report.all_match = true;
  mpz_class power = 1;
  const mpz_class p(static_cast<unsigned long>(base));
  for (uint32_t ell = 0; ell <= length; ++ell) {
    if (report.carry_counts[ell] != power * report.doubling_counts[ell]) {
      report.all_match = false;
      report.mismatches.push_back(ell);
    }
    power *= p;
  }
  return report;
}

mpz_class fibonacci_bisection(uint32_t length) {
  // Fast doubling: F(2n) = F(n) (2F(n+1) - F(n)), F(2n+1) = F(n)^2 + F(n+1)^2.
  const uint64_t target = 2ull * length + 2;
  mpz_class f = 0, g = 1;  // F(i), F(i+1) with i = 0
  for (int bit = 63; bit >= 0; --bit) {
    mpz_class f2 = f * (2 * g - f);
    mpz_class g2 = f * f + g * g;
    if ((target >> bit) & 1) {
      f = g2;
      g = f2 + g2;
    } else {
      f = f2;
      g = g2;
    }
  }
  return f;
}

KummerReport kummer_carry_count(const mpz_class& m, const mpz_class& n,
                                uint64_t prime) {
  if (!is_prime_u64(prime)) {
    fail(ErrorCode::NotPrime, std::to_string(prime) + " is not prime");
  }
  if (m < 0 || n < 0) fail(ErrorCode::InvalidArgument, "operands must be non-negative");
  KummerReport report;
  mpz_class a = m, b = n;
  unsigned long carry = 0;
  const unsigned long p = static_cast<unsigned long>(prime);
  while (a > 0 || b > 0 || carry > 0) {
    mpz_class qa, qb;
    const unsigned long da = mpz_fdiv_q_ui(qa.get_mpz_t(), a.get_mpz_t(), p);
    const unsigned long db = mpz_fdiv_q_ui(qb.get_mpz_t(), b.get_mpz_t(), p);
    const unsigned long sum = da + db + carry;
    carry = sum >= p ? 1 : 0;
    if (carry) {
      ++report.total;
      if (da + db >= p) ++report.generated;
      else ++report.propagated;  // da + db == p-1 with an incoming carry
    }
    a = qa;
    b = qb;
  }
  return report;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t mod) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % mod);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t mod) {
  uint64_t acc = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) acc = mulmod_u64(acc, base, mod);
    base = mulmod_u64(base, base, mod);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set is exact for every 64-bit integer.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace cascade
