#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

// Exercises the shared library strictly through its C surface: status codes,
// thread-local error messages, opaque handles, and string ownership.
#include <cascade.h>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

using testsupport::near;

namespace {

// Takes ownership of a C string result and frees it through the library.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  cascade_string_free(s);
  return out;
}

struct IntsGuard {
  cascade_ints* ptr = nullptr;
  ~IntsGuard() { cascade_ints_free(ptr); }

  std::string str(size_t index) const {
    char* out = nullptr;
    REQUIRE(cascade_ints_get_str(ptr, index, &out) == CASCADE_OK);
    return take(out);
  }
  int64_t i64(size_t index) const {
    int64_t out = 0;
    REQUIRE(cascade_ints_get_i64(ptr, index, &out) == CASCADE_OK);
    return out;
  }
};

struct OpGuard {
  cascade_op* ptr = nullptr;
  ~OpGuard() { cascade_op_free(ptr); }
};

}  // namespace

TEST_CASE("status names cover the full enum") {
  CHECK(std::string(cascade_status_name(CASCADE_OK)) == "OK");
  CHECK(std::string(cascade_status_name(CASCADE_ERR_INVALID_ARGUMENT)) ==
        "InvalidArgument");
  CHECK(std::string(cascade_status_name(CASCADE_ERR_NOT_PRIME)) == "NotPrime");
  CHECK(std::string(cascade_status_name(CASCADE_ERR_SYMBOL_OUT_OF_RANGE)) ==
        "SymbolOutOfRange");
  CHECK(std::string(cascade_status_name(CASCADE_ERR_BUDGET_EXCEEDED)) ==
        "BudgetExceeded");
  CHECK(std::string(cascade_status_name(CASCADE_ERR_TOLERANCE_NOT_MET)) ==
        "ToleranceNotMet");
  CHECK(std::string(cascade_status_name(CASCADE_ERR_PARSE)) == "ParseError");
}

TEST_CASE("count sequences and element access") {
  IntsGuard counts;
  REQUIRE(cascade_count_cascade_free(1, 2, 1, 5, &counts.ptr) == CASCADE_OK);
  REQUIRE(cascade_ints_size(counts.ptr) == 6);
  const int64_t expected[] = {1, 4, 14, 48, 164, 560};
  for (size_t i = 0; i < 6; ++i) CHECK(counts.i64(i) == expected[i]);
  CHECK(counts.str(5) == "560");

  SUBCASE("out-of-range index") {
    char* out = nullptr;
    CHECK(cascade_ints_get_str(counts.ptr, 6, &out) ==
          CASCADE_ERR_INVALID_ARGUMENT);
    CHECK(std::string(cascade_last_error()).find("index") != std::string::npos);
  }
  SUBCASE("int64 overflow is reported, decimal route still works") {
    IntsGuard big;
    REQUIRE(cascade_count_cascade_free(3, 3, 3, 80, &big.ptr) == CASCADE_OK);
    int64_t value = 0;
    CHECK(cascade_ints_get_i64(big.ptr, 80, &value) == CASCADE_ERR_OVERFLOW);
    char* text = nullptr;
    REQUIRE(cascade_ints_get_str(big.ptr, 80, &text) == CASCADE_OK);
    const std::string decimal = take(text);
    CHECK(decimal.size() > 19);  // exceeds any int64
  }
  SUBCASE("series route agrees") {
    IntsGuard series;
    REQUIRE(cascade_gf_coefficients(1, 2, 1, 5, &series.ptr) == CASCADE_OK);
    for (size_t i = 0; i < 6; ++i) CHECK(series.i64(i) == expected[i]);
  }
  SUBCASE("invalid class sizes") {
    cascade_ints* out = nullptr;
    CHECK(cascade_count_cascade_free(0, 0, 0, 3, &out) ==
          CASCADE_ERR_INVALID_ARGUMENT);
    CHECK(out == nullptr);
    CHECK(cascade_last_error()[0] != '\0');
  }
}

TEST_CASE("density, spectral data, transfer matrix") {
  char* density = nullptr;
  REQUIRE(cascade_density(1, 2, 1, 2, &density) == CASCADE_OK);
  CHECK(take(density) == "7/8");

  cascade_matrix2 m;
  REQUIRE(cascade_transfer_matrix(1, 2, 1, &m) == CASCADE_OK);
  CHECK(m.m[0] == 3);
  CHECK(m.m[1] == 1);
  CHECK(m.m[2] == 1);
  CHECK(m.m[3] == 1);

  cascade_spectral s;
  REQUIRE(cascade_spectral_data(1, 1, 1, &s) == CASCADE_OK);
  CHECK(s.trace == 3);
  CHECK(s.determinant == 1);
  CHECK(s.discriminant == 5);
  CHECK(near(s.coupling, 1.5, 1e-12));
  CHECK(s.degenerate == 0);

  REQUIRE(cascade_spectral_data(1, 0, 1, &s) == CASCADE_OK);
  CHECK(s.infinite_coupling == 1);
  CHECK(std::isinf(s.coupling));

  double u = 0;
  REQUIRE(cascade_chebyshev_u(4, 1.0, &u) == CASCADE_OK);
  CHECK(u == 5.0);

  cascade_cheb_report report;
  REQUIRE(cascade_verify_chebyshev(1, 2, 1, 20, 1e-9, &report) == CASCADE_OK);
  CHECK(report.pass == 1);
  CHECK(report.max_rel_error <= 1e-9);
  CHECK(cascade_verify_chebyshev(1, 0, 1, 20, 1e-9, &report) ==
        CASCADE_ERR_NOT_APPLICABLE);
}

TEST_CASE("named instances") {
  uint64_t g = 0, t = 0, k = 0;
  REQUIRE(cascade_addition_gpk(2, &g, &t, &k) == CASCADE_OK);
  CHECK(g == 1);
  CHECK(t == 2);
  CHECK(k == 1);
  REQUIRE(cascade_doubling_gpk(3, &g, &t, &k) == CASCADE_OK);
  CHECK(g == 1);
  CHECK(t == 1);
  CHECK(k == 1);
  CHECK(cascade_addition_gpk(1, &g, &t, &k) == CASCADE_ERR_INVALID_BASE);
  CHECK(cascade_last_error()[0] != '\0');

  char* fib = nullptr;
  REQUIRE(cascade_fibonacci_bisection(5, &fib) == CASCADE_OK);
  CHECK(take(fib) == "144");

  cascade_scaling_report scaling;
  REQUIRE(cascade_scaling_law_check(7, 6, &scaling) == CASCADE_OK);
  CHECK(scaling.all_match == 1);
  REQUIRE(cascade_scaling_law_check(10, 6, &scaling) == CASCADE_OK);
  CHECK(scaling.all_match == 0);
  CHECK(scaling.first_mismatch == 2);

  cascade_kummer_report census;
  REQUIRE(cascade_kummer_carry_count("5", "13", 3, &census) == CASCADE_OK);
  CHECK(census.total == 2);
  CHECK(census.generated == 1);
  CHECK(census.propagated == 1);
  CHECK(cascade_kummer_carry_count("1", "2", 6, &census) ==
        CASCADE_ERR_NOT_PRIME);
  CHECK(cascade_kummer_carry_count("x", "2", 3, &census) == CASCADE_ERR_PARSE);
}

TEST_CASE("stateful operations through handles") {
  OpGuard lifted;
  REQUIRE(cascade_lift_gpk(1, 1, 1, &lifted.ptr) == CASCADE_OK);
  uint32_t states = 0, alphabet = 0, forbidden = 0, initial = 0;
  REQUIRE(cascade_op_info(lifted.ptr, &states, &alphabet, &forbidden,
                          &initial) == CASCADE_OK);
  CHECK(states == 3);
  CHECK(alphabet == 3);
  CHECK(forbidden == 2);
  CHECK(initial == 0);

  uint32_t dim = 0;
  IntsGuard matrix;
  REQUIRE(cascade_op_restricted_matrix(lifted.ptr, &dim, &matrix.ptr) ==
          CASCADE_OK);
  REQUIRE(dim == 2);
  CHECK(matrix.i64(0) == 2);
  CHECK(matrix.i64(1) == 1);
  CHECK(matrix.i64(2) == 1);
  CHECK(matrix.i64(3) == 1);

  IntsGuard poly;
  REQUIRE(cascade_op_char_poly(lifted.ptr, &poly.ptr) == CASCADE_OK);
  REQUIRE(cascade_ints_size(poly.ptr) == 3);
  CHECK(poly.i64(0) == 1);
  CHECK(poly.i64(1) == -3);
  CHECK(poly.i64(2) == 1);

  IntsGuard counts;
  REQUIRE(cascade_op_count_avoiding(lifted.ptr, 5, &counts.ptr) == CASCADE_OK);
  const int64_t expected[] = {1, 3, 8, 21, 55, 144};
  for (size_t i = 0; i < 6; ++i) CHECK(counts.i64(i) == expected[i]);

  IntsGuard recounted;
  REQUIRE(cascade_op_count_by_recurrence(lifted.ptr, 5, &recounted.ptr) ==
          CASCADE_OK);
  for (size_t i = 0; i < 6; ++i) CHECK(recounted.i64(i) == expected[i]);

  SUBCASE("builtins") {
    OpGuard ternary;
    REQUIRE(cascade_op_builtin("ternary3", &ternary.ptr) == CASCADE_OK);
    IntsGuard a;
    REQUIRE(cascade_op_count_avoiding(ternary.ptr, 2, &a.ptr) == CASCADE_OK);
    CHECK(a.i64(0) == 1);
    CHECK(a.i64(1) == 26);
    CHECK(a.i64(2) == 628);

    OpGuard binary;
    REQUIRE(cascade_op_builtin("binary4", &binary.ptr) == CASCADE_OK);
    IntsGuard b;
    REQUIRE(cascade_op_count_avoiding(binary.ptr, 3, &b.ptr) == CASCADE_OK);
    CHECK(b.i64(3) == 4015);

    cascade_op* bad = nullptr;
    CHECK(cascade_op_builtin("unknown", &bad) == CASCADE_ERR_INVALID_ARGUMENT);

    OpGuard sediment;
    REQUIRE(cascade_op_sediment(3, &sediment.ptr) == CASCADE_OK);
    IntsGuard c;
    REQUIRE(cascade_op_count_avoiding(sediment.ptr, 3, &c.ptr) == CASCADE_OK);
    CHECK(c.i64(3) == 216);
  }

  SUBCASE("direct table construction and classification") {
    const uint32_t table[] = {0, 0, 0, 1, 1, 1};  // doubling in base 3
    OpGuard op;
    REQUIRE(cascade_op_create(2, 3, table, 1, 0, &op.ptr) == CASCADE_OK);
    uint64_t g = 0, t = 0, k = 0;
    REQUIRE(cascade_op_classify_gpk(op.ptr, &g, &t, &k) == CASCADE_OK);
    CHECK(g == 1);
    CHECK(t == 1);
    CHECK(k == 1);

    const uint32_t negation[] = {1, 0};
    OpGuard swap;
    REQUIRE(cascade_op_create(2, 1, negation, 1, 0, &swap.ptr) == CASCADE_OK);
    CHECK(cascade_op_classify_gpk(swap.ptr, &g, &t, &k) ==
          CASCADE_ERR_NEGATION_PRESENT);
    CHECK(cascade_op_classify_gpk(lifted.ptr, &g, &t, &k) ==
          CASCADE_ERR_NOT_BINARY_STATE);
  }

  SUBCASE("universality verdicts") {
    OpGuard a, b;
    REQUIRE(cascade_lift_gpk(1, 4, 1, &a.ptr) == CASCADE_OK);
    REQUIRE(cascade_lift_gpk(4, 1, 1, &b.ptr) == CASCADE_OK);
    cascade_universality_report report;
    REQUIRE(cascade_universality_equal(a.ptr, b.ptr, 50, &report) == CASCADE_OK);
    CHECK(report.charpoly_equal == 1);
    CHECK(report.seeds_equal == 1);
    CHECK(report.counts_equal == 1);

    cascade_universality_report different;
    REQUIRE(cascade_universality_equal(a.ptr, lifted.ptr, 10, &different) ==
            CASCADE_OK);
    CHECK(different.charpoly_equal == 0);
    CHECK(different.counts_equal == 0);
  }

  SUBCASE("restricted coupling data") {
    cascade_spectral s;
    REQUIRE(cascade_op_chebyshev3(lifted.ptr, &s) == CASCADE_OK);
    CHECK(s.trace == 3);
    CHECK(s.determinant == 1);
    CHECK(near(s.coupling, 1.5, 1e-12));

    OpGuard binary;
    REQUIRE(cascade_op_builtin("binary4", &binary.ptr) == CASCADE_OK);
    CHECK(cascade_op_chebyshev3(binary.ptr, &s) == CASCADE_ERR_NOT_APPLICABLE);

    OpGuard sediment;
    REQUIRE(cascade_op_sediment(3, &sediment.ptr) == CASCADE_OK);
    CHECK(cascade_op_chebyshev3(sediment.ptr, &s) == CASCADE_ERR_NOT_APPLICABLE);
  }
}

TEST_CASE("operation specs in JSON") {
  const char* good = R"({
    "version": 1,
    "states": 2,
    "alphabet": 3,
    "transitions": [[0, 0], [0, 1], [1, 1]],
    "forbidden_state": 1
  })";
  OpGuard op;
  REQUIRE(cascade_op_from_json(good, &op.ptr) == CASCADE_OK);
  uint32_t states = 0, alphabet = 0, forbidden = 0, initial = 0;
  REQUIRE(cascade_op_info(op.ptr, &states, &alphabet, &forbidden, &initial) ==
          CASCADE_OK);
  CHECK(states == 2);
  CHECK(alphabet == 3);
  CHECK(forbidden == 1);
  CHECK(initial == 0);  // default when omitted

  cascade_op* out = nullptr;
  SUBCASE("malformed text") {
    CHECK(cascade_op_from_json("not json", &out) == CASCADE_ERR_PARSE);
    CHECK(out == nullptr);
  }
  SUBCASE("unknown fields are rejected") {
    const char* extra = R"({
      "version": 1, "states": 2, "alphabet": 1,
      "transitions": [[0, 0]], "forbidden_state": 1, "comment": "no"
    })";
    CHECK(cascade_op_from_json(extra, &out) == CASCADE_ERR_PARSE);
  }
  SUBCASE("unsupported version") {
    const char* v2 = R"({
      "version": 2, "states": 2, "alphabet": 1,
      "transitions": [[0, 0]], "forbidden_state": 1
    })";
    CHECK(cascade_op_from_json(v2, &out) == CASCADE_ERR_PARSE);
  }
  SUBCASE("missing required field") {
    const char* missing = R"({
      "version": 1, "states": 2, "alphabet": 1, "transitions": [[0, 0]]
    })";
    CHECK(cascade_op_from_json(missing, &out) == CASCADE_ERR_PARSE);
  }
  SUBCASE("row shape mismatch") {
    const char* ragged = R"({
      "version": 1, "states": 2, "alphabet": 2,
      "transitions": [[0, 0], [0]], "forbidden_state": 1
    })";
    CHECK(cascade_op_from_json(ragged, &out) == CASCADE_ERR_PARSE);
  }
  SUBCASE("constraint violations surface the library's own codes") {
    const char* clash = R"({
      "version": 1, "states": 2, "alphabet": 1,
      "transitions": [[0, 0]], "forbidden_state": 1, "initial_state": 1
    })";
    CHECK(cascade_op_from_json(clash, &out) == CASCADE_ERR_INVALID_ARGUMENT);
  }
}

TEST_CASE("exhaustive oracles and simulation") {
  char* text = nullptr;
  REQUIRE(cascade_brute_cascade_free(1, 1, 1, 4, 0, &text) == CASCADE_OK);
  CHECK(take(text) == "55");
  REQUIRE(cascade_brute_adjacency(1, 1, 1, 4, 0, &text) == CASCADE_OK);
  CHECK(take(text) == "55");
  CHECK(cascade_brute_cascade_free(3, 3, 3, 9, 1000, &text) ==
        CASCADE_ERR_BUDGET_EXCEEDED);
  CHECK(std::string(cascade_last_error()).find("budget") != std::string::npos);

  OpGuard ternary;
  REQUIRE(cascade_op_builtin("ternary3", &ternary.ptr) == CASCADE_OK);
  REQUIRE(cascade_op_brute_avoiding(ternary.ptr, 2, 0, &text) == CASCADE_OK);
  CHECK(take(text) == "628");

  const uint32_t table[] = {0, 0, 0, 1, 1, 1};  // doubling in base 3
  OpGuard op;
  REQUIRE(cascade_op_create(2, 3, table, 1, 0, &op.ptr) == CASCADE_OK);
  const uint32_t word[] = {2, 1, 1, 0};
  std::vector<uint32_t> states(5, 99);
  uint64_t ones = 0, gen_count = 0, prop_star = 0;
  REQUIRE(cascade_simulate(op.ptr, word, 4, states.data(), &ones, &gen_count,
                           &prop_star) == CASCADE_OK);
  CHECK(states == std::vector<uint32_t>{0, 1, 1, 1, 0});
  CHECK(ones == 3);
  CHECK(gen_count == 1);
  CHECK(prop_star == 2);

  const uint32_t bad_word[] = {7};
  CHECK(cascade_simulate(op.ptr, bad_word, 1, states.data(), &ones, &gen_count,
                         &prop_star) == CASCADE_ERR_SYMBOL_OUT_OF_RANGE);

  SUBCASE("null stat sinks are allowed") {
    REQUIRE(cascade_simulate(op.ptr, word, 4, states.data(), nullptr, nullptr,
                             nullptr) == CASCADE_OK);
  }
}

TEST_CASE("randomized estimates through the C surface") {
  CHECK(cascade_counter_rng(1, 2, 3) == 1072907043932612987ull);

  cascade_mc_report a, b;
  REQUIRE(cascade_monte_carlo(3, 3, 3, 20, 5000, 9, &a) == CASCADE_OK);
  REQUIRE(cascade_monte_carlo(3, 3, 3, 20, 5000, 9, &b) == CASCADE_OK);
  CHECK(a.samples == 5000);
  CHECK(a.mean == b.mean);
  CHECK(a.dispersion == b.dispersion);
  CHECK(a.dispersion_se > 0);
  CHECK(cascade_monte_carlo(0, 1, 1, 10, 100, 1, &a) ==
        CASCADE_ERR_DEGENERATE_DISTRIBUTION);
}

TEST_CASE("chain and moment reports") {
  cascade_chain chain;
  REQUIRE(cascade_markov_chain(1, 1, 1, &chain) == CASCADE_OK);
  CHECK(near(chain.mu, 1.0 / 3.0, 1e-15));
  CHECK(near(chain.pi0, 0.5, 1e-15));
  CHECK(near(chain.pi1, 0.5, 1e-15));
  CHECK(near(chain.rows[0], 2.0 / 3.0, 1e-15));
  CHECK(near(chain.rows[1], 1.0 / 3.0, 1e-15));
  CHECK(cascade_markov_chain(0, 3, 0, &chain) == CASCADE_ERR_DEGENERATE_CHAIN);

  char* mu = nullptr;
  char* pi0 = nullptr;
  char* pi1 = nullptr;
  REQUIRE(cascade_markov_chain_strings(1, 1, 1, &mu, &pi0, &pi1) == CASCADE_OK);
  CHECK(take(mu) == "1/3");
  CHECK(take(pi0) == "1/2");
  CHECK(take(pi1) == "1/2");

  cascade_moments m{};
  REQUIRE(cascade_transient_moments(3, 3, 3, 4, &m) == CASCADE_OK);
  CHECK(std::string(m.mean) == "142/81");
  CHECK(std::string(m.variance) == "10292/6561");
  CHECK(std::string(m.dispersion) == "5146/5751");
  CHECK(m.transient == 1);
  CHECK(near(m.dispersion_d, 5146.0 / 5751.0, 1e-12));
  cascade_moments_clear(&m);
  CHECK(m.mean == nullptr);
  cascade_moments_clear(&m);  // clearing twice is safe

  cascade_moments s{};
  REQUIRE(cascade_stationary_moments(1, 1, 1, 1, &s) == CASCADE_OK);
  CHECK(std::string(s.mean) == "1/2");
  CHECK(std::string(s.variance) == "1/4");
  CHECK(s.transient == 0);
  cascade_moments_clear(&s);

  char* exact = nullptr;
  double value = 0;
  REQUIRE(cascade_autocorrelation(3, 3, 3, 2, &exact, &value) == CASCADE_OK);
  CHECK(take(exact) == "1/9");
  CHECK(near(value, 1.0 / 9.0, 1e-15));

  char* per_position = nullptr;
  char* ratio = nullptr;
  double per_position_d = 0, ratio_d = 0;
  REQUIRE(cascade_expected_propagation(1, 2, 1, &per_position, &ratio,
                                       &per_position_d, &ratio_d) == CASCADE_OK);
  CHECK(take(per_position) == "1/4");
  CHECK(take(ratio) == "1/2");

  REQUIRE(cascade_asymptotic_dispersion(1, 2, 1, &exact, &value) == CASCADE_OK);
  CHECK(take(exact) == "3/2");
  CHECK(near(value, 1.5, 1e-15));
  CHECK(cascade_asymptotic_dispersion(0, 1, 1, &exact, &value) ==
        CASCADE_ERR_DEGENERATE_DISTRIBUTION);
}

TEST_CASE("symmetric-chain analysis surface") {
  char* exact = nullptr;
  double value = 0;
  REQUIRE(cascade_symmetric_dispersion_limit("1/3", &exact, &value) == CASCADE_OK);
  CHECK(take(exact) == "1");
  CHECK(value == 1.0);

  REQUIRE(cascade_marginal_dispersion("1/2", 3, &exact, &value) == CASCADE_OK);
  CHECK(take(exact) == "21/16");

  REQUIRE(cascade_symmetric_dispersion("1/3", 4, &exact, &value) == CASCADE_OK);
  CHECK(take(exact) == "5146/5751");

  CHECK(cascade_symmetric_dispersion_limit("3/2", &exact, &value) ==
        CASCADE_ERR_INVALID_MU);
  CHECK(cascade_symmetric_dispersion_limit("zz", &exact, &value) ==
        CASCADE_ERR_PARSE);

  cascade_poisson_root_report root;
  REQUIRE(cascade_poisson_root(10, 0, &root) == CASCADE_OK);
  CHECK(near(root.mu_star, 0.352526384, 1e-8));
  CHECK(root.tol == 1e-12);
  CHECK(root.residual <= 1e-12);
  CHECK(cascade_poisson_root(1, 0, &root) == CASCADE_ERR_NO_INTERIOR_ROOT);

  char* first_order = nullptr;
  double residual = 0;
  REQUIRE(cascade_expansion_check("1/3", 8, &exact, &first_order, &residual) ==
          CASCADE_OK);
  CHECK(take(first_order) == "61/64");  // 1 - 3/(8 L) at L = 8
  cascade_string_free(exact);
  CHECK(residual > 0);

  const char* grid[] = {"1/10", "1/2"};
  uint64_t checks = 0;
  int all_pass = 0;
  char* failure = nullptr;
  REQUIRE(cascade_monotonicity_scan(grid, 2, 20, &checks, &all_pass, &failure) ==
          CASCADE_OK);
  CHECK(all_pass == 1);
  CHECK(failure == nullptr);
  CHECK(checks > 100);

  const char* bad_grid[] = {"0"};
  CHECK(cascade_monotonicity_scan(bad_grid, 1, 20, &checks, &all_pass,
                                  &failure) == CASCADE_ERR_INVALID_MU);
}

TEST_CASE("free functions tolerate null") {
  cascade_string_free(nullptr);
  cascade_ints_free(nullptr);
  cascade_op_free(nullptr);
}
