#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cli_common.hpp"

namespace cli {

namespace {

struct RowCounter {
  int failures = 0;
  int rows = 0;

  void row(bool ok, const std::string& label, const std::string& detail = "") {
    ++rows;
    if (ok) {
      std::printf("  ok   %s\n", label.c_str());
    } else {
      ++failures;
      std::printf("  FAIL %s%s\n", label.c_str(),
                  detail.empty() ? "" : ("  (" + detail + ")").c_str());
    }
  }
};

uint64_t pow_u64(uint64_t base, uint32_t exp) {
  uint64_t acc = 1;
  for (uint32_t i = 0; i < exp; ++i) acc *= base;
  return acc;
}

// Exact carry/doubling counts for odd prime bases at L = 2, 3, 4; the carry
// column equals base^L times the doubling column.
struct ScalingRow {
  uint64_t base;
  uint32_t length;
  uint64_t carry;
  uint64_t doubling;
};
constexpr ScalingRow kScalingRows[] = {
    {3, 2, 72, 8},           {3, 3, 567, 21},         {3, 4, 4455, 55},
    {5, 2, 575, 23},         {5, 3, 13125, 105},      {5, 4, 299375, 479},
    {7, 2, 2254, 46},        {7, 3, 103243, 301},     {7, 4, 4727569, 1969},
    {11, 2, 14036, 116},     {11, 3, 1625151, 1221},  {11, 4, 188151491, 12851},
    {13, 2, 27547, 163},     {13, 3, 4484077, 2041},  {13, 4, 729876355, 25555},
};

int suite_scaling() {
  RowCounter rc;
  for (const ScalingRow& row : kScalingRows) {
    uint64_t g, t, k;
    check(cascade_addition_gpk(row.base, &g, &t, &k));
    Ints carry;
    check(cascade_count_cascade_free(g, t, k, row.length, &carry.ptr));
    check(cascade_doubling_gpk(row.base, &g, &t, &k));
    Ints dbl;
    check(cascade_count_cascade_free(g, t, k, row.length, &dbl.ptr));
    const int64_t got_carry = carry.i64(row.length);
    const int64_t got_dbl = dbl.i64(row.length);
    const bool ok = got_carry == static_cast<int64_t>(row.carry) &&
                    got_dbl == static_cast<int64_t>(row.doubling) &&
                    row.carry == pow_u64(row.base, row.length) * row.doubling;
    char label[96];
    std::snprintf(label, sizeof label, "p=%2" PRIu64 " L=%u carry=%" PRIu64
                                       " doubling=%" PRIu64,
                  row.base, row.length, row.carry, row.doubling);
    char detail[96];
    std::snprintf(detail, sizeof detail, "got carry=%" PRId64 " doubling=%" PRId64,
                  got_carry, got_dbl);
    rc.row(ok, label, ok ? "" : detail);
  }
  for (uint64_t base : {3ull, 5ull, 7ull, 11ull, 13ull}) {
    cascade_scaling_report report;
    check(cascade_scaling_law_check(base, 4, &report));
    rc.row(report.all_match == 1,
           "p=" + std::to_string(base) + " carry(L) == p^L * doubling(L), L <= 4");
  }
  return rc.failures;
}

// Base-3 doubling counts are the even-indexed Fibonacci numbers F(2L+2); the
// carry column is the same scaled by 3^L.
int suite_fibonacci() {
  RowCounter rc;
  constexpr uint64_t kDoubling[] = {1, 3, 8, 21, 55, 144};
  constexpr uint64_t kCarry[] = {1, 9, 72, 567, 4455, 34992};
  uint64_t g, t, k;
  check(cascade_doubling_gpk(3, &g, &t, &k));
  Ints dbl;
  check(cascade_count_cascade_free(g, t, k, 5, &dbl.ptr));
  check(cascade_addition_gpk(3, &g, &t, &k));
  Ints carry;
  check(cascade_count_cascade_free(g, t, k, 5, &carry.ptr));
  for (uint32_t ell = 0; ell <= 5; ++ell) {
    CStr fib;
    check(cascade_fibonacci_bisection(ell, &fib.ptr));
    const bool ok = dbl.i64(ell) == static_cast<int64_t>(kDoubling[ell]) &&
                    fib.str() == std::to_string(kDoubling[ell]) &&
                    carry.i64(ell) == static_cast<int64_t>(kCarry[ell]);
    rc.row(ok, "L=" + std::to_string(ell) + " doubling=" +
                   std::to_string(kDoubling[ell]) + " = F(" +
                   std::to_string(2 * ell + 2) + "), carry=" +
                   std::to_string(kCarry[ell]),
           "got doubling=" + dbl.str(ell) + " fib=" + fib.str() +
               " carry=" + carry.str(ell));
  }
  return rc.failures;
}

// Base-2 addition counts (OEIS A007070).
int suite_a007070() {
  RowCounter rc;
  constexpr int64_t kExpected[] = {1, 4, 14, 48, 164, 560};
  uint64_t g, t, k;
  check(cascade_addition_gpk(2, &g, &t, &k));
  Ints counts;
  check(cascade_count_cascade_free(g, t, k, 5, &counts.ptr));
  for (uint32_t ell = 0; ell <= 5; ++ell) {
    rc.row(counts.i64(ell) == kExpected[ell],
           "L=" + std::to_string(ell) + " a=" + std::to_string(kExpected[ell]),
           "got " + counts.str(ell));
  }
  return rc.failures;
}

// Asymptotic dispersion of the carry count for small bases.
int suite_dispersion() {
  RowCounter rc;
  const std::pair<uint64_t, std::string> rows[] = {
      {2, "3/2"}, {3, "1"}, {5, "3/4"}, {7, "2/3"}};
  for (const auto& [base, expected] : rows) {
    uint64_t g, t, k;
    check(cascade_addition_gpk(base, &g, &t, &k));
    CStr exact;
    double value = 0;
    check(cascade_asymptotic_dispersion(g, t, k, &exact.ptr, &value));
    rc.row(exact.str() == expected,
           "p=" + std::to_string(base) + " D_inf=" + expected,
           "got " + exact.str());
  }
  return rc.failures;
}

// Unit-dispersion roots mu*(L) and the rate products L (mu* - 1/3).
int suite_convergence() {
  RowCounter rc;
  struct Row {
    uint32_t length;
    double mu_star;
    double product;
  };
  constexpr Row rows[] = {{2, 0.52138, 0.37609},   {5, 0.379164, 0.22915},
                          {10, 0.352526, 0.19193}, {20, 0.342237, 0.17807},
                          {50, 0.336753, 0.17098}, {100, 0.335021, 0.16879}};
  for (const Row& row : rows) {
    cascade_poisson_root_report report;
    check(cascade_poisson_root(row.length, 0, &report));
    const double product = row.length * (report.mu_star - 1.0 / 3.0);
    const bool ok = std::abs(report.mu_star - row.mu_star) <= 5e-5 &&
                    std::abs(product - row.product) <= 5e-3;
    char label[96];
    std::snprintf(label, sizeof label, "L=%3u mu*=%.6f product=%.5f",
                  row.length, row.mu_star, row.product);
    char detail[96];
    std::snprintf(detail, sizeof detail, "got mu*=%.6f product=%.5f",
                  report.mu_star, product);
    rc.row(ok, label, ok ? "" : detail);
  }
  return rc.failures;
}

// Discriminant and coupling of the doubling instance. The base-2 doubling
// alphabet has no pass-through digit (determinant 0), so its row is carried by
// the addition instance, whose discriminant is base^2 times the tabulated
// value and whose coupling matches directly.
int suite_discriminant() {
  RowCounter rc;
  struct Row {
    uint64_t base;
    int64_t discriminant;
    double coupling;
  };
  constexpr Row rows[] = {{2, 2, 1.414},  {3, 5, 1.500},  {5, 17, 1.768},
                          {7, 37, 2.021}, {13, 145, 2.653}};
  for (const Row& row : rows) {
    uint64_t g, t, k;
    cascade_spectral spectral;
    int64_t discriminant = 0;
    if (row.base == 2) {
      check(cascade_addition_gpk(row.base, &g, &t, &k));
      check(cascade_spectral_data(g, t, k, &spectral));
      discriminant =
          spectral.discriminant / static_cast<int64_t>(row.base * row.base);
    } else {
      check(cascade_doubling_gpk(row.base, &g, &t, &k));
      check(cascade_spectral_data(g, t, k, &spectral));
      discriminant = spectral.discriminant;
    }
    const bool ok =
        discriminant == row.discriminant &&
        std::abs(spectral.coupling - row.coupling) <= 1e-3 * row.coupling;
    char label[96];
    std::snprintf(label, sizeof label, "p=%2" PRIu64 " Delta=%" PRId64 " x=%.3f",
                  row.base, row.discriminant, row.coupling);
    char detail[96];
    std::snprintf(detail, sizeof detail, "got Delta=%" PRId64 " x=%.6f",
                  discriminant, spectral.coupling);
    rc.row(ok, label, ok ? "" : detail);
  }
  return rc.failures;
}

bool ints_equal(const Ints& seq, const std::vector<int64_t>& expected) {
  if (seq.size() != expected.size()) return false;
  for (size_t i = 0; i < expected.size(); ++i) {
    if (seq.i64(i) != expected[i]) return false;
  }
  return true;
}

// Restricted matrices, characteristic polynomial, and avoidance counts for
// the three-digit base-3 sum, the four-digit binary sum, and the mod-3 pair
// sum; small exhaustive cross-checks close the loop.
int suite_avoidance() {
  RowCounter rc;
  {
    Op ternary;
    check(cascade_op_builtin("ternary3", &ternary.ptr));
    uint32_t dim = 0;
    Ints matrix;
    check(cascade_op_restricted_matrix(ternary.ptr, &dim, &matrix.ptr));
    rc.row(dim == 2 && ints_equal(matrix, {10, 16, 4, 19}),
           "ternary3 restricted matrix [[10,16],[4,19]]");
    Ints counts;
    check(cascade_op_count_avoiding(ternary.ptr, 4, &counts.ptr));
    rc.row(ints_equal(counts, {1, 26, 628, 14936, 354016}),
           "ternary3 counts 1,26,628,14936,354016");
    CStr brute;
    check(cascade_op_brute_avoiding(ternary.ptr, 2, 0, &brute.ptr));
    rc.row(brute.str() == "628", "ternary3 exhaustive L=2 = 628",
           "got " + brute.str());
  }
  {
    Op binary;
    check(cascade_op_builtin("binary4", &binary.ptr));
    uint32_t dim = 0;
    Ints matrix;
    check(cascade_op_restricted_matrix(binary.ptr, &dim, &matrix.ptr));
    rc.row(dim == 3 && ints_equal(matrix, {5, 10, 1, 1, 10, 5, 0, 5, 10}),
           "binary4 restricted matrix [[5,10,1],[1,10,5],[0,5,10]]");
    Ints poly;
    check(cascade_op_char_poly(binary.ptr, &poly.ptr));
    rc.row(ints_equal(poly, {1, -25, 165, -280}),
           "binary4 characteristic polynomial (1,-25,165,-280)");
    Ints counts;
    check(cascade_op_count_avoiding(binary.ptr, 2, &counts.ptr));
    rc.row(ints_equal(counts, {1, 16, 255}), "binary4 counts 1,16,255");
    CStr brute;
    check(cascade_op_brute_avoiding(binary.ptr, 3, 0, &brute.ptr));
    rc.row(brute.str() == "4015", "binary4 exhaustive L=3 = 4015",
           "got " + brute.str());
  }
  {
    Op sediment;
    check(cascade_op_sediment(3, &sediment.ptr));
    Ints counts;
    check(cascade_op_count_avoiding(sediment.ptr, 4, &counts.ptr));
    rc.row(ints_equal(counts, {1, 6, 36, 216, 1296}),
           "sediment p=3 counts 6^L, L <= 4");
  }
  return rc.failures;
}

}  // namespace

int run_verify_suite(const std::string& name) {
  static const std::map<std::string, std::function<int()>> suites = {
      {"scaling", suite_scaling},
      {"fibonacci", suite_fibonacci},
      {"a007070", suite_a007070},
      {"dispersion", suite_dispersion},
      {"convergence", suite_convergence},
      {"discriminant", suite_discriminant},
      {"avoidance", suite_avoidance},
  };
  int failures = 0;
  if (name == "all") {
    for (const auto& [suite_name, fn] : suites) {
      std::printf("suite %s:\n", suite_name.c_str());
      failures += fn();
    }
  } else {
    const auto it = suites.find(name);
    if (it == suites.end()) {
      throw UsageError("unknown suite '" + name +
                       "' (expected scaling, fibonacci, a007070, dispersion, "
                       "convergence, discriminant, avoidance, or all)");
    }
    std::printf("suite %s:\n", name.c_str());
    failures = it->second();
  }
  return failures;
}

}  // namespace cli
