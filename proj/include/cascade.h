/* C interface for the cascade-free counting library.
 *
 * Conventions:
 *   - every function returns a cascade_status; CASCADE_OK means success;
 *   - on failure, cascade_last_error() gives a thread-local message valid
 *     until the next library call on the same thread;
 *   - char** outputs receive heap strings released via cascade_string_free;
 *   - opaque handles are released via their matching _free function;
 *   - a budget of 0 selects the built-in default (10^7 enumerated words);
 *   - exact rationals are passed as decimal strings, either "num/den" or an
 *     integer, e.g. "1/3".
 */
#ifndef CASCADE_H
#define CASCADE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cascade_status {
  CASCADE_OK = 0,
  CASCADE_ERR_INVALID_ARGUMENT,
  CASCADE_ERR_INVALID_BASE,
  CASCADE_ERR_NOT_PRIME,
  CASCADE_ERR_NOT_APPLICABLE,
  CASCADE_ERR_NEGATION_PRESENT,
  CASCADE_ERR_NOT_BINARY_STATE,
  CASCADE_ERR_STATE_COUNT_MISMATCH,
  CASCADE_ERR_SYMBOL_OUT_OF_RANGE,
  CASCADE_ERR_SEED_TOO_SHORT,
  CASCADE_ERR_BUDGET_EXCEEDED,
  CASCADE_ERR_DEGENERATE_DISTRIBUTION,
  CASCADE_ERR_DEGENERATE_CHAIN,
  CASCADE_ERR_NO_INTERIOR_ROOT,
  CASCADE_ERR_TOLERANCE_NOT_MET,
  CASCADE_ERR_INVALID_MU,
  CASCADE_ERR_PARSE,
  CASCADE_ERR_OVERFLOW,
  CASCADE_ERR_INTERNAL
} cascade_status;

const char* cascade_status_name(cascade_status status);
const char* cascade_last_error(void);
void cascade_string_free(char* s);

/* ---- integer sequences -------------------------------------------------- */

typedef struct cascade_ints cascade_ints;

void cascade_ints_free(cascade_ints* seq);
size_t cascade_ints_size(const cascade_ints* seq);
/* Decimal representation of element `index`. */
cascade_status cascade_ints_get_str(const cascade_ints* seq, size_t index,
                                    char** out);
/* Element as int64 when it fits, CASCADE_ERR_OVERFLOW otherwise. */
cascade_status cascade_ints_get_i64(const cascade_ints* seq, size_t index,
                                    int64_t* out);

/* ---- counting for gen/prop/kill operations ------------------------------ */

/* Transfer matrix over (clear, set), row-major. */
typedef struct cascade_matrix2 {
  int64_t m[4];
} cascade_matrix2;

typedef struct cascade_spectral {
  int64_t trace;
  int64_t determinant;
  int64_t discriminant;
  double lambda_plus;
  double lambda_minus;
  double coupling; /* trace / (2 sqrt(det)); +inf when det <= 0 */
  int degenerate;
  int infinite_coupling;
} cascade_spectral;

typedef struct cascade_cheb_report {
  double max_rel_error;
  int pass;
} cascade_cheb_report;

cascade_status cascade_transfer_matrix(uint64_t gen, uint64_t prop,
                                       uint64_t kill, cascade_matrix2* out);
/* a(0..length) via the two-term integer recurrence. */
cascade_status cascade_count_cascade_free(uint64_t gen, uint64_t prop,
                                          uint64_t kill, uint32_t length,
                                          cascade_ints** out);
/* Same coefficients via exact power-series reciprocation. */
cascade_status cascade_gf_coefficients(uint64_t gen, uint64_t prop,
                                       uint64_t kill, uint32_t length,
                                       cascade_ints** out);
/* a(length) / N^length as "num/den". */
cascade_status cascade_density(uint64_t gen, uint64_t prop, uint64_t kill,
                               uint32_t length, char** out);
cascade_status cascade_spectral_data(uint64_t gen, uint64_t prop, uint64_t kill,
                                     cascade_spectral* out);
cascade_status cascade_chebyshev_u(uint32_t n, double x, double* out);
cascade_status cascade_verify_chebyshev(uint64_t gen, uint64_t prop,
                                        uint64_t kill, uint32_t length,
                                        double tolerance,
                                        cascade_cheb_report* out);

/* ---- named instances ----------------------------------------------------- */

cascade_status cascade_addition_gpk(uint64_t base, uint64_t* gen,
                                    uint64_t* prop, uint64_t* kill);
cascade_status cascade_doubling_gpk(uint64_t base, uint64_t* gen,
                                    uint64_t* prop, uint64_t* kill);
/* F(2 length + 2), equal to the base-3 doubling count. */
cascade_status cascade_fibonacci_bisection(uint32_t length, char** out);

typedef struct cascade_scaling_report {
  int all_match;
  uint32_t first_mismatch; /* meaningful when all_match == 0 */
} cascade_scaling_report;

/* carry(L) == base^L * doubling(L) for all L <= length? */
cascade_status cascade_scaling_law_check(uint64_t base, uint32_t length,
                                         cascade_scaling_report* out);

typedef struct cascade_kummer_report {
  uint64_t total;
  uint64_t generated;
  uint64_t propagated;
} cascade_kummer_report;

/* Carry census of m + n in base `prime` (decimal string operands). */
cascade_status cascade_kummer_carry_count(const char* m_decimal,
                                          const char* n_decimal, uint64_t prime,
                                          cascade_kummer_report* out);

/* ---- stateful operations and avoidance counting -------------------------- */

typedef struct cascade_op cascade_op;

/* `table` is symbol-major with alphabet*states entries: table[x*states + s]. */
cascade_status cascade_op_create(uint32_t states, uint32_t alphabet,
                                 const uint32_t* table, uint32_t forbidden,
                                 uint32_t initial, cascade_op** out);
/* JSON object with fields version(=1), states, alphabet, transitions
 * (alphabet rows of states entries), forbidden_state, and optional
 * initial_state (default 0); any other field is rejected. */
cascade_status cascade_op_from_json(const char* json_text, cascade_op** out);
/* "ternary3" (three base-3 digits) or "binary4" (four binary digits). */
cascade_status cascade_op_builtin(const char* name, cascade_op** out);
/* Mod-base running pair sum with residue base-1 forbidden. */
cascade_status cascade_op_sediment(uint64_t base, cascade_op** out);
void cascade_op_free(cascade_op* op);
cascade_status cascade_op_info(const cascade_op* op, uint32_t* states,
                               uint32_t* alphabet, uint32_t* forbidden,
                               uint32_t* initial);
/* Row-major dim*dim transition-count matrix over non-forbidden states. */
cascade_status cascade_op_restricted_matrix(const cascade_op* op, uint32_t* dim,
                                            cascade_ints** out);
/* Monic characteristic polynomial coefficients (1, c1, ..., c_dim). */
cascade_status cascade_op_char_poly(const cascade_op* op, cascade_ints** out);
/* a(0..length) by iterated matrix products. */
cascade_status cascade_op_count_avoiding(const cascade_op* op, uint32_t length,
                                         cascade_ints** out);
/* Seed by matrix products, rest by the characteristic-polynomial recurrence. */
cascade_status cascade_op_count_by_recurrence(const cascade_op* op,
                                              uint32_t length,
                                              cascade_ints** out);

typedef struct cascade_universality_report {
  int charpoly_equal;
  int counts_equal;
  int seeds_equal;
} cascade_universality_report;

cascade_status cascade_universality_equal(const cascade_op* a,
                                          const cascade_op* b, uint32_t length,
                                          cascade_universality_report* out);
/* Spectral data of a 2x2 restricted matrix. */
cascade_status cascade_op_chebyshev3(const cascade_op* op,
                                     cascade_spectral* out);
/* Sort a two-state operation's symbols into gen/prop/kill. */
cascade_status cascade_op_classify_gpk(const cascade_op* op, uint64_t* gen,
                                       uint64_t* prop, uint64_t* kill);
/* Three-state avoidance encoding of the cascade-free constraint. */
cascade_status cascade_lift_gpk(uint64_t gen, uint64_t prop, uint64_t kill,
                                cascade_op** out);

/* ---- exhaustive and randomized oracles ----------------------------------- */

cascade_status cascade_brute_cascade_free(uint64_t gen, uint64_t prop,
                                          uint64_t kill, uint32_t length,
                                          uint64_t budget, char** out);
cascade_status cascade_brute_adjacency(uint64_t gen, uint64_t prop,
                                       uint64_t kill, uint32_t length,
                                       uint64_t budget, char** out);
cascade_status cascade_op_brute_avoiding(const cascade_op* op, uint32_t length,
                                         uint64_t budget, char** out);

/* States buffer must hold word_len + 1 entries. For two-state operations,
 * gen_count/prop_star report the generated and received-pass-through tallies;
 * they are zero for larger state spaces. Null stat pointers are allowed. */
cascade_status cascade_simulate(const cascade_op* op, const uint32_t* word,
                                size_t word_len, uint32_t* states_out,
                                uint64_t* ones, uint64_t* gen_count,
                                uint64_t* prop_star);

typedef struct cascade_mc_report {
  double mean;
  double variance;
  double dispersion;
  double mean_se;
  double variance_se;
  double dispersion_se;
  uint64_t samples;
} cascade_mc_report;

cascade_status cascade_monte_carlo(uint64_t gen, uint64_t prop, uint64_t kill,
                                   uint32_t length, uint64_t samples,
                                   uint64_t seed, cascade_mc_report* out);
uint64_t cascade_counter_rng(uint64_t seed, uint64_t stream, uint64_t counter);

/* ---- dispersion of the set-state count ----------------------------------- */

typedef struct cascade_chain {
  double mu;
  double pi0;
  double pi1;
  double correlation_length;
  double rows[4]; /* transition matrix, row-major */
} cascade_chain;

cascade_status cascade_markov_chain(uint64_t gen, uint64_t prop, uint64_t kill,
                                    cascade_chain* out);
cascade_status cascade_markov_chain_strings(uint64_t gen, uint64_t prop,
                                            uint64_t kill, char** mu,
                                            char** pi0, char** pi1);

typedef struct cascade_moments {
  char* mean;       /* exact rationals; release with cascade_moments_clear */
  char* variance;
  char* dispersion;
  double mean_d;
  double variance_d;
  double dispersion_d;
  int transient; /* 1 when started from the clear state */
} cascade_moments;

void cascade_moments_clear(cascade_moments* m);
cascade_status cascade_stationary_moments(uint64_t gen, uint64_t prop,
                                          uint64_t kill, uint32_t length,
                                          cascade_moments* out);
cascade_status cascade_transient_moments(uint64_t gen, uint64_t prop,
                                         uint64_t kill, uint32_t length,
                                         cascade_moments* out);
cascade_status cascade_autocorrelation(uint64_t gen, uint64_t prop,
                                       uint64_t kill, uint32_t lag,
                                       char** exact, double* value);
cascade_status cascade_expected_propagation(uint64_t gen, uint64_t prop,
                                            uint64_t kill, char** per_position,
                                            char** ratio, double* per_position_d,
                                            double* ratio_d);
cascade_status cascade_asymptotic_dispersion(uint64_t gen, uint64_t prop,
                                             uint64_t kill, char** exact,
                                             double* value);

/* ---- symmetric chains and the unit-dispersion root ----------------------- */

cascade_status cascade_symmetric_dispersion_limit(const char* mu, char** exact,
                                                  double* value);
cascade_status cascade_marginal_dispersion(const char* mu, uint32_t k,
                                           char** exact, double* value);
cascade_status cascade_symmetric_dispersion(const char* mu, uint32_t length,
                                            char** exact, double* value);

typedef struct cascade_poisson_root_report {
  uint32_t length;
  double mu_star;
  double residual;
  double tol;
} cascade_poisson_root_report;

/* tol <= 0 selects the default 1e-12. */
cascade_status cascade_poisson_root(uint32_t length, double tol,
                                    cascade_poisson_root_report* out);
cascade_status cascade_expansion_check(const char* mu, uint32_t length,
                                       char** exact, char** first_order,
                                       double* residual_abs);
/* mus: array of rational strings. On success, *all_pass tells whether every
 * check held and *first_failure (optional) receives NULL or a description. */
cascade_status cascade_monotonicity_scan(const char* const* mus, size_t n_mus,
                                         uint32_t length_max, uint64_t* checks,
                                         int* all_pass, char** first_failure);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CASCADE_H */
