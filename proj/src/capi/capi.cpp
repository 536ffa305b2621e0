#include "cascade.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

#include <nlohmann/json.hpp>

#include "core/avoidance.hpp"
#include "core/counting.hpp"
#include "core/instances.hpp"
#include "core/markov.hpp"
#include "core/oracle.hpp"
#include "core/poisson.hpp"

using cascade::Error;
using cascade::ErrorCode;

namespace {

thread_local std::string g_last_error;

cascade_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return CASCADE_ERR_INVALID_ARGUMENT;
    case ErrorCode::InvalidBase: return CASCADE_ERR_INVALID_BASE;
    case ErrorCode::NotPrime: return CASCADE_ERR_NOT_PRIME;
    case ErrorCode::NotApplicable: return CASCADE_ERR_NOT_APPLICABLE;
    case ErrorCode::NegationPresent: return CASCADE_ERR_NEGATION_PRESENT;
    case ErrorCode::NotBinaryState: return CASCADE_ERR_NOT_BINARY_STATE;
    case ErrorCode::StateCountMismatch: return CASCADE_ERR_STATE_COUNT_MISMATCH;
    case ErrorCode::SymbolOutOfRange: return CASCADE_ERR_SYMBOL_OUT_OF_RANGE;
    case ErrorCode::SeedTooShort: return CASCADE_ERR_SEED_TOO_SHORT;
    case ErrorCode::BudgetExceeded: return CASCADE_ERR_BUDGET_EXCEEDED;
    case ErrorCode::DegenerateDistribution:
      return CASCADE_ERR_DEGENERATE_DISTRIBUTION;
    case ErrorCode::DegenerateChain: return CASCADE_ERR_DEGENERATE_CHAIN;
    case ErrorCode::NoInteriorRoot: return CASCADE_ERR_NO_INTERIOR_ROOT;
    case ErrorCode::ToleranceNotMet: return CASCADE_ERR_TOLERANCE_NOT_MET;
    case ErrorCode::InvalidMu: return CASCADE_ERR_INVALID_MU;
    case ErrorCode::ParseError: return CASCADE_ERR_PARSE;
    case ErrorCode::Overflow: return CASCADE_ERR_OVERFLOW;
    case ErrorCode::Internal: return CASCADE_ERR_INTERNAL;
  }
  return CASCADE_ERR_INTERNAL;
}

template <typename Fn>
cascade_status wrap(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CASCADE_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CASCADE_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CASCADE_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

mpq_class parse_mu(const char* text) {
  require(text != nullptr, "null rational string");
  const std::string s(text);
  try {
    if (s.find('/') != std::string::npos ||
        s.find_first_of(".eE") == std::string::npos) {
      mpq_class q(s, 10);
      q.canonicalize();
      return q;
    }
    size_t used = 0;
    const double value = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return mpq_class(value);  // exact binary expansion of the double
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "cannot parse rational '" + s + "'");
  }
}

cascade::Gpk make_gpk(uint64_t g, uint64_t t, uint64_t k) {
  return cascade::Gpk(g, t, k);
}

void fill_spectral(const cascade::SpectralData& s, cascade_spectral* out) {
  require(out != nullptr, "null output pointer");
  require(s.trace.fits_slong_p() && s.determinant.fits_slong_p() &&
              s.discriminant.fits_slong_p(),
          "spectral values exceed int64");
  out->trace = s.trace.get_si();
  out->determinant = s.determinant.get_si();
  out->discriminant = s.discriminant.get_si();
  out->lambda_plus = s.lambda_plus;
  out->lambda_minus = s.lambda_minus;
  out->coupling = s.coupling;
  out->degenerate = s.degenerate ? 1 : 0;
  out->infinite_coupling = s.infinite_coupling ? 1 : 0;
}

}  // namespace

struct cascade_ints {
  cascade::Counts values;
};

struct cascade_op {
  cascade::StatefulOperation op;
};

extern "C" {

const char* cascade_status_name(cascade_status status) {
  switch (status) {
    case CASCADE_OK: return "OK";
    case CASCADE_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case CASCADE_ERR_INVALID_BASE: return "InvalidBase";
    case CASCADE_ERR_NOT_PRIME: return "NotPrime";
    case CASCADE_ERR_NOT_APPLICABLE: return "NotApplicable";
    case CASCADE_ERR_NEGATION_PRESENT: return "NegationPresent";
    case CASCADE_ERR_NOT_BINARY_STATE: return "NotBinaryState";
    case CASCADE_ERR_STATE_COUNT_MISMATCH: return "StateCountMismatch";
    case CASCADE_ERR_SYMBOL_OUT_OF_RANGE: return "SymbolOutOfRange";
    case CASCADE_ERR_SEED_TOO_SHORT: return "SeedTooShort";
    case CASCADE_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
    case CASCADE_ERR_DEGENERATE_DISTRIBUTION: return "DegenerateDistribution";
    case CASCADE_ERR_DEGENERATE_CHAIN: return "DegenerateChain";
    case CASCADE_ERR_NO_INTERIOR_ROOT: return "NoInteriorRoot";
    case CASCADE_ERR_TOLERANCE_NOT_MET: return "ToleranceNotMet";
    case CASCADE_ERR_INVALID_MU: return "InvalidMu";
    case CASCADE_ERR_PARSE: return "ParseError";
    case CASCADE_ERR_OVERFLOW: return "Overflow";
    case CASCADE_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* cascade_last_error(void) { return g_last_error.c_str(); }

void cascade_string_free(char* s) { std::free(s); }

void cascade_ints_free(cascade_ints* seq) { delete seq; }

size_t cascade_ints_size(const cascade_ints* seq) {
  return seq == nullptr ? 0 : seq->values.size();
}

cascade_status cascade_ints_get_str(const cascade_ints* seq, size_t index,
                                    char** out) {
  return wrap([&] {
    require(seq != nullptr && out != nullptr, "null argument");
    require(index < seq->values.size(), "index out of range");
    *out = dup_string(seq->values[index].get_str());
  });
}

cascade_status cascade_ints_get_i64(const cascade_ints* seq, size_t index,
                                    int64_t* out) {
  return wrap([&] {
    require(seq != nullptr && out != nullptr, "null argument");
    require(index < seq->values.size(), "index out of range");
    const mpz_class& v = seq->values[index];
    if (!v.fits_slong_p()) {
      throw Error(ErrorCode::Overflow, "value does not fit int64");
    }
    *out = static_cast<int64_t>(v.get_si());
  });
}

cascade_status cascade_transfer_matrix(uint64_t gen, uint64_t prop,
                                       uint64_t kill, cascade_matrix2* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    const cascade::TransferMatrix2 m =
        cascade::build_transfer_matrix(make_gpk(gen, prop, kill));
    out->m[0] = static_cast<int64_t>(m.entries[0][0]);
    out->m[1] = static_cast<int64_t>(m.entries[0][1]);
    out->m[2] = static_cast<int64_t>(m.entries[1][0]);
    out->m[3] = static_cast<int64_t>(m.entries[1][1]);
  });
}

cascade_status cascade_count_cascade_free(uint64_t gen, uint64_t prop,
                                          uint64_t kill, uint32_t length,
                                          cascade_ints** out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = new cascade_ints{
        cascade::count_cascade_free(make_gpk(gen, prop, kill), length)};
  });
}

cascade_status cascade_gf_coefficients(uint64_t gen, uint64_t prop,
                                       uint64_t kill, uint32_t length,
                                       cascade_ints** out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = new cascade_ints{
        cascade::gf_coefficients(make_gpk(gen, prop, kill), length)};
  });
}

cascade_status cascade_density(uint64_t gen, uint64_t prop, uint64_t kill,
                               uint32_t length, char** out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = dup_string(
        cascade::cascade_free_density(make_gpk(gen, prop, kill), length)
            .get_str());
  });
}

cascade_status cascade_spectral_data(uint64_t gen, uint64_t prop, uint64_t kill,
                                     cascade_spectral* out) {
  return wrap([&] {
    fill_spectral(cascade::spectral_data(make_gpk(gen, prop, kill)), out);
  });
}

cascade_status cascade_chebyshev_u(uint32_t n, double x, double* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = cascade::chebyshev_u(n, x);
  });
}

cascade_status cascade_verify_chebyshev(uint64_t gen, uint64_t prop,
                                        uint64_t kill, uint32_t length,
                                        double tolerance,
                                        cascade_cheb_report* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    const cascade::ChebyshevReport r = cascade::verify_chebyshev_representation(
        make_gpk(gen, prop, kill), length, tolerance);
    out->max_rel_error = r.max_rel_error;
    out->pass = r.pass ? 1 : 0;
  });
}

cascade_status cascade_addition_gpk(uint64_t base, uint64_t* gen,
                                    uint64_t* prop, uint64_t* kill) {
  return wrap([&] {
    require(gen != nullptr && prop != nullptr && kill != nullptr,
            "null output pointer");
    const cascade::Gpk g = cascade::addition_instance(base);
    *gen = g.gen;
    *prop = g.prop;
    *kill = g.kill;
  });
}

cascade_status cascade_doubling_gpk(uint64_t base, uint64_t* gen,
                                    uint64_t* prop, uint64_t* kill) {
  return wrap([&] {
    require(gen != nullptr && prop != nullptr && kill != nullptr,
            "null output pointer");
    const cascade::Gpk g = cascade::doubling_instance(base);
    *gen = g.gen;
    *prop = g.prop;
    *kill = g.kill;
  });
}

cascade_status cascade_fibonacci_bisection(uint32_t length, char** out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = dup_string(cascade::fibonacci_bisection(length).get_str());
  });
}

cascade_status cascade_scaling_law_check(uint64_t base, uint32_t length,
                                         cascade_scaling_report* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    const cascade::ScalingLawReport r = cascade::scaling_law_check(base, length);
    out->all_match = r.all_match ? 1 : 0;
    out->first_mismatch = r.mismatches.empty() ? 0 : r.mismatches.front();
  });
}

cascade_status cascade_kummer_carry_count(const char* m_decimal,
                                          const char* n_decimal, uint64_t prime,
                                          cascade_kummer_report* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    require(m_decimal != nullptr && n_decimal != nullptr, "null operand");
    mpz_class m, n;
    try {
      m = mpz_class(m_decimal, 10);
      n = mpz_class(n_decimal, 10);
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::ParseError, "operands must be decimal integers");
    }
    const cascade::KummerReport r = cascade::kummer_carry_count(m, n, prime);
    out->total = r.total;
    out->generated = r.generated;
    out->propagated = r.propagated;
  });
}

cascade_status cascade_op_create(uint32_t states, uint32_t alphabet,
                                 const uint32_t* table, uint32_t forbidden,
                                 uint32_t initial, cascade_op** out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    require(table != nullptr, "null transition table");
    std::vector<uint32_t> entries(
        table, table + static_cast<size_t>(states) * alphabet);
    *out = new cascade_op{cascade::StatefulOperation::make(
        states, alphabet, std::move(entries), forbidden, initial)};
  });
}

cascade_status cascade_op_from_json(const char* json_text, cascade_op** out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    require(json_text != nullptr, "null JSON text");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    auto parse_fail = [](const std::string& what) -> Error {
      return Error(ErrorCode::ParseError, "operation spec: " + what);
    };
    if (!doc.is_object()) throw parse_fail("top level must be an object");
    static const char* const required[] = {"version", "states", "alphabet",
                                           "forbidden_state", "transitions"};
    for (const char* key : required) {
      if (!doc.contains(key)) throw parse_fail(std::string("missing field '") + key + "'");
    }
    for (const auto& item : doc.items()) {
      const std::string& key = item.key();
      bool known = key == "initial_state";
      for (const char* r : required) known = known || key == r;
      if (!known) throw parse_fail("unknown field '" + key + "'");
    }
    if (!doc["version"].is_number_unsigned() || doc["version"] != 1u) {
      throw parse_fail("version must be 1");
    }
    if (!doc.contains("initial_state")) doc["initial_state"] = 0u;
    for (const char* key : {"states", "alphabet", "forbidden_state", "initial_state"}) {
      if (!doc[key].is_number_unsigned()) {
        throw parse_fail(std::string("field '") + key +
                         "' must be a non-negative integer");
      }
    }
    const uint64_t states = doc["states"].get<uint64_t>();
    const uint64_t alphabet = doc["alphabet"].get<uint64_t>();
    if (states > std::numeric_limits<uint32_t>::max() ||
        alphabet > std::numeric_limits<uint32_t>::max()) {
      throw parse_fail("states/alphabet out of range");
    }
    const auto& rows = doc["transitions"];
    if (!rows.is_array() || rows.size() != alphabet) {
      throw parse_fail("transitions must list one row per symbol");
    }
    std::vector<uint32_t> table;
    table.reserve(states * alphabet);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != states) {
        throw parse_fail("each transitions row must list one target per state");
      }
      for (const auto& cell : row) {
        if (!cell.is_number_unsigned()) {
          throw parse_fail("transition targets must be non-negative integers");
        }
        const uint64_t target = cell.get<uint64_t>();
        if (target >= states) throw parse_fail("transition target out of range");
        table.push_back(static_cast<uint32_t>(target));
      }
    }
    *out = new cascade_op{cascade::StatefulOperation::make(
        static_cast<uint32_t>(states), static_cast<uint32_t>(alphabet),
        std::move(table), doc["forbidden_state"].get<uint32_t>(),
        doc["initial_state"].get<uint32_t>())};
  });
}

cascade_status cascade_op_builtin(const char* name, cascade_op** out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    require(name != nullptr, "null name");
    const std::string id(name);
    if (id == "ternary3") {
      *out = new cascade_op{cascade::ternary_three_sum()};
    } else if (id == "binary4") {
      *out = new cascade_op{cascade::binary_four_sum()};
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown builtin '" + id + "'");
    }
  });
}

cascade_status cascade_op_sediment(uint64_t base, cascade_op** out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = new cascade_op{cascade::sediment_instance(base)};
  });
}

void cascade_op_free(cascade_op* op) { delete op; }

cascade_status cascade_op_info(const cascade_op* op, uint32_t* states,
                               uint32_t* alphabet, uint32_t* forbidden,
                               uint32_t* initial) {
  return wrap([&] {
    require(op != nullptr, "null operation");
    if (states != nullptr) *states = op->op.states;
    if (alphabet != nullptr) *alphabet = op->op.alphabet;
    if (forbidden != nullptr) *forbidden = op->op.forbidden;
    if (initial != nullptr) *initial = op->op.initial;
  });
}

cascade_status cascade_op_restricted_matrix(const cascade_op* op, uint32_t* dim,
                                            cascade_ints** out) {
  return wrap([&] {
    require(op != nullptr && out != nullptr && dim != nullptr, "null argument");
    const cascade::RestrictedMatrix m = cascade::restricted_matrix(op->op);
    *dim = m.dim;
    cascade::Counts values;
    values.reserve(m.entries.size());
    for (uint64_t e : m.entries) values.emplace_back(static_cast<unsigned long>(e));
    *out = new cascade_ints{std::move(values)};
  });
}

cascade_status cascade_op_char_poly(const cascade_op* op, cascade_ints** out) {
  return wrap([&] {
    require(op != nullptr && out != nullptr, "null argument");
    cascade::CharPoly poly = cascade::char_poly(cascade::restricted_matrix(op->op));
    *out = new cascade_ints{std::move(poly.coeffs)};
  });
}

cascade_status cascade_op_count_avoiding(const cascade_op* op, uint32_t length,
                                         cascade_ints** out) {
  return wrap([&] {
    require(op != nullptr && out != nullptr, "null argument");
    *out = new cascade_ints{cascade::count_avoiding(op->op, length)};
  });
}

cascade_status cascade_op_count_by_recurrence(const cascade_op* op,
                                              uint32_t length,
                                              cascade_ints** out) {
  return wrap([&] {
    require(op != nullptr && out != nullptr, "null argument");
    *out = new cascade_ints{cascade::count_by_recurrence(op->op, length)};
  });
}

cascade_status cascade_universality_equal(const cascade_op* a,
                                          const cascade_op* b, uint32_t length,
                                          cascade_universality_report* out) {
  return wrap([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    const cascade::UniversalityReport r =
        cascade::universality_equal(a->op, b->op, length);
    out->charpoly_equal = r.charpoly_equal ? 1 : 0;
    out->counts_equal = r.counts_equal ? 1 : 0;
    out->seeds_equal = r.seeds_equal ? 1 : 0;
  });
}

cascade_status cascade_op_chebyshev3(const cascade_op* op,
                                     cascade_spectral* out) {
  return wrap([&] {
    require(op != nullptr, "null operation");
    fill_spectral(cascade::spectral_data_restricted(op->op), out);
  });
}

cascade_status cascade_op_classify_gpk(const cascade_op* op, uint64_t* gen,
                                       uint64_t* prop, uint64_t* kill) {
  return wrap([&] {
    require(op != nullptr && gen != nullptr && prop != nullptr && kill != nullptr,
            "null argument");
    const cascade::Gpk g = cascade::classify_gpk(op->op);
    *gen = g.gen;
    *prop = g.prop;
    *kill = g.kill;
  });
}

cascade_status cascade_lift_gpk(uint64_t gen, uint64_t prop, uint64_t kill,
                                cascade_op** out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = new cascade_op{cascade::lift_gpk(make_gpk(gen, prop, kill))};
  });
}

cascade_status cascade_brute_cascade_free(uint64_t gen, uint64_t prop,
                                          uint64_t kill, uint32_t length,
                                          uint64_t budget, char** out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = dup_string(cascade::brute_count_cascade_free(
                          make_gpk(gen, prop, kill), length,
                          budget == 0 ? cascade::kDefaultBudget : budget)
                          .get_str());
  });
}

cascade_status cascade_brute_adjacency(uint64_t gen, uint64_t prop,
                                       uint64_t kill, uint32_t length,
                                       uint64_t budget, char** out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    *out = dup_string(cascade::brute_count_adjacency(
                          make_gpk(gen, prop, kill), length,
                          budget == 0 ? cascade::kDefaultBudget : budget)
                          .get_str());
  });
}

cascade_status cascade_op_brute_avoiding(const cascade_op* op, uint32_t length,
                                         uint64_t budget, char** out) {
  return wrap([&] {
    require(op != nullptr && out != nullptr, "null argument");
    *out = dup_string(cascade::brute_count_avoiding(
                          op->op, length,
                          budget == 0 ? cascade::kDefaultBudget : budget)
                          .get_str());
  });
}

cascade_status cascade_simulate(const cascade_op* op, const uint32_t* word,
                                size_t word_len, uint32_t* states_out,
                                uint64_t* ones, uint64_t* gen_count,
                                uint64_t* prop_star) {
  return wrap([&] {
    require(op != nullptr, "null operation");
    require(word != nullptr || word_len == 0, "null word");
    require(states_out != nullptr, "null states buffer");
    const cascade::TrajectoryStats stats = cascade::simulate_trajectory(
        op->op, std::span<const uint32_t>(word, word_len));
    for (size_t i = 0; i < stats.states.size(); ++i) states_out[i] = stats.states[i];
    if (ones != nullptr) *ones = stats.ones;
    if (gen_count != nullptr) *gen_count = stats.gen_count;
    if (prop_star != nullptr) *prop_star = stats.prop_star;
  });
}

cascade_status cascade_monte_carlo(uint64_t gen, uint64_t prop, uint64_t kill,
                                   uint32_t length, uint64_t samples,
                                   uint64_t seed, cascade_mc_report* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    const cascade::MonteCarloEstimate e = cascade::monte_carlo_dispersion(
        make_gpk(gen, prop, kill), length, samples, seed);
    out->mean = e.mean;
    out->variance = e.variance;
    out->dispersion = e.dispersion;
    out->mean_se = e.mean_se;
    out->variance_se = e.variance_se;
    out->dispersion_se = e.dispersion_se;
    out->samples = e.samples;
  });
}

uint64_t cascade_counter_rng(uint64_t seed, uint64_t stream, uint64_t counter) {
  return cascade::counter_rng(seed, stream, counter);
}

cascade_status cascade_markov_chain(uint64_t gen, uint64_t prop, uint64_t kill,
                                    cascade_chain* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    const cascade::MarkovChain c = cascade::markov_chain(make_gpk(gen, prop, kill));
    out->mu = cascade::to_double(c.mu);
    out->pi0 = cascade::to_double(c.pi0);
    out->pi1 = cascade::to_double(c.pi1);
    out->correlation_length = c.correlation_length;
    out->rows[0] = cascade::to_double(c.rows[0][0]);
    out->rows[1] = cascade::to_double(c.rows[0][1]);
    out->rows[2] = cascade::to_double(c.rows[1][0]);
    out->rows[3] = cascade::to_double(c.rows[1][1]);
  });
}

cascade_status cascade_markov_chain_strings(uint64_t gen, uint64_t prop,
                                            uint64_t kill, char** mu,
                                            char** pi0, char** pi1) {
  return wrap([&] {
    require(mu != nullptr && pi0 != nullptr && pi1 != nullptr,
            "null output pointer");
    const cascade::MarkovChain c = cascade::markov_chain(make_gpk(gen, prop, kill));
    *mu = dup_string(c.mu.get_str());
    *pi0 = dup_string(c.pi0.get_str());
    *pi1 = dup_string(c.pi1.get_str());
  });
}

void cascade_moments_clear(cascade_moments* m) {
  if (m == nullptr) return;
  std::free(m->mean);
  std::free(m->variance);
  std::free(m->dispersion);
  m->mean = m->variance = m->dispersion = nullptr;
}

namespace {

void fill_moments(const cascade::MomentReport& r, cascade_moments* out) {
  require(out != nullptr, "null output pointer");
  out->mean = dup_string(r.mean.get_str());
  out->variance = dup_string(r.variance.get_str());
  out->dispersion = dup_string(r.dispersion.get_str());
  out->mean_d = cascade::to_double(r.mean);
  out->variance_d = cascade::to_double(r.variance);
  out->dispersion_d = cascade::to_double(r.dispersion);
  out->transient = r.regime == cascade::Regime::Transient ? 1 : 0;
}

}  // namespace

cascade_status cascade_stationary_moments(uint64_t gen, uint64_t prop,
                                          uint64_t kill, uint32_t length,
                                          cascade_moments* out) {
  return wrap([&] {
    fill_moments(cascade::stationary_moments(make_gpk(gen, prop, kill), length),
                 out);
  });
}

cascade_status cascade_transient_moments(uint64_t gen, uint64_t prop,
                                         uint64_t kill, uint32_t length,
                                         cascade_moments* out) {
  return wrap([&] {
    fill_moments(cascade::transient_moments(make_gpk(gen, prop, kill), length),
                 out);
  });
}

cascade_status cascade_autocorrelation(uint64_t gen, uint64_t prop,
                                       uint64_t kill, uint32_t lag,
                                       char** exact, double* value) {
  return wrap([&] {
    require(exact != nullptr && value != nullptr, "null output pointer");
    const mpq_class r = cascade::autocorrelation(make_gpk(gen, prop, kill), lag);
    *exact = dup_string(r.get_str());
    *value = cascade::to_double(r);
  });
}

cascade_status cascade_expected_propagation(uint64_t gen, uint64_t prop,
                                            uint64_t kill, char** per_position,
                                            char** ratio, double* per_position_d,
                                            double* ratio_d) {
  return wrap([&] {
    require(per_position != nullptr && ratio != nullptr &&
                per_position_d != nullptr && ratio_d != nullptr,
            "null output pointer");
    const cascade::PropagationRates r =
        cascade::expected_propagation(make_gpk(gen, prop, kill));
    *per_position = dup_string(r.per_position.get_str());
    *ratio = dup_string(r.ratio.get_str());
    *per_position_d = cascade::to_double(r.per_position);
    *ratio_d = cascade::to_double(r.ratio);
  });
}

cascade_status cascade_asymptotic_dispersion(uint64_t gen, uint64_t prop,
                                             uint64_t kill, char** exact,
                                             double* value) {
  return wrap([&] {
    require(exact != nullptr && value != nullptr, "null output pointer");
    const mpq_class r = cascade::asymptotic_dispersion(make_gpk(gen, prop, kill));
    *exact = dup_string(r.get_str());
    *value = cascade::to_double(r);
  });
}

cascade_status cascade_symmetric_dispersion_limit(const char* mu, char** exact,
                                                  double* value) {
  return wrap([&] {
    require(exact != nullptr && value != nullptr, "null output pointer");
    const mpq_class r = cascade::symmetric_dispersion_limit(parse_mu(mu));
    *exact = dup_string(r.get_str());
    *value = cascade::to_double(r);
  });
}

cascade_status cascade_marginal_dispersion(const char* mu, uint32_t k,
                                           char** exact, double* value) {
  return wrap([&] {
    require(exact != nullptr && value != nullptr, "null output pointer");
    const mpq_class r = cascade::marginal_dispersion(parse_mu(mu), k);
    *exact = dup_string(r.get_str());
    *value = cascade::to_double(r);
  });
}

cascade_status cascade_symmetric_dispersion(const char* mu, uint32_t length,
                                            char** exact, double* value) {
  return wrap([&] {
    require(exact != nullptr && value != nullptr, "null output pointer");
    const mpq_class r = cascade::symmetric_dispersion(parse_mu(mu), length);
    *exact = dup_string(r.get_str());
    *value = cascade::to_double(r);
  });
}

cascade_status cascade_poisson_root(uint32_t length, double tol,
                                    cascade_poisson_root_report* out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    const cascade::PoissonRoot r = cascade::poisson_root(length, tol);
    out->length = r.length;
    out->mu_star = r.mu_star;
    out->residual = r.residual;
    out->tol = r.tol;
  });
}

cascade_status cascade_expansion_check(const char* mu, uint32_t length,
                                       char** exact, char** first_order,
                                       double* residual_abs) {
  return wrap([&] {
    require(exact != nullptr && first_order != nullptr && residual_abs != nullptr,
            "null output pointer");
    const cascade::ExpansionCheck c =
        cascade::asymptotic_expansion_check(parse_mu(mu), length);
    *exact = dup_string(c.exact.get_str());
    *first_order = dup_string(c.first_order.get_str());
    *residual_abs = std::abs(cascade::to_double(c.residual));
  });
}

cascade_status cascade_monotonicity_scan(const char* const* mus, size_t n_mus,
                                         uint32_t length_max, uint64_t* checks,
                                         int* all_pass, char** first_failure) {
  return wrap([&] {
    require(mus != nullptr || n_mus == 0, "null grid");
    require(checks != nullptr && all_pass != nullptr, "null output pointer");
    std::vector<mpq_class> grid;
    grid.reserve(n_mus);
    for (size_t i = 0; i < n_mus; ++i) grid.push_back(parse_mu(mus[i]));
    const cascade::ScanReport r = cascade::monotonicity_scan(grid, length_max);
    *checks = r.checks;
    *all_pass = r.all_pass() ? 1 : 0;
    if (first_failure != nullptr) {
      *first_failure = r.failures.empty() ? nullptr : dup_string(r.failures.front());
    }
  });
}

}  // extern "C"
