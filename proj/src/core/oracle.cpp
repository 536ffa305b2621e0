#include "core/oracle.hpp"

#include <cmath>

namespace cascade {

TrajectoryStats simulate_trajectory(const StatefulOperation& op,
                                    std::span<const uint32_t> word) {
  TrajectoryStats stats;
  stats.states.reserve(word.size() + 1);
  uint32_t state = op.initial;
  stats.states.push_back(state);
  for (uint32_t symbol : word) {
    if (symbol >= op.alphabet) {
      fail(ErrorCode::SymbolOutOfRange,
           "symbol " + std::to_string(symbol) + " outside alphabet");
    }
    if (op.states == 2) {
      const uint32_t from0 = op.apply(symbol, 0);
      const uint32_t from1 = op.apply(symbol, 1);
      if (from0 == 1 && from1 == 1) ++stats.gen_count;
      else if (from0 == 0 && from1 == 1 && state == 1) ++stats.prop_star;
    }
    state = op.apply(symbol, state);
    stats.states.push_back(state);
    if (state == 1) ++stats.ones;
  }
  return stats;
}

namespace {

uint64_t checked_word_count(uint64_t alphabet, uint32_t length, uint64_t budget) {
  if (budget == 0) budget = kDefaultBudget;
  uint64_t total = 0;
  if (!checked_pow_u64(alphabet, length, budget, &total)) {
    fail(ErrorCode::BudgetExceeded,
         "enumeration of " + std::to_string(alphabet) + "^" +
             std::to_string(length) + " words exceeds budget " +
             std::to_string(budget));
  }
  return total;
}

// Calls visit(word) for every word in lexicographic order.
template <typename Visit>
void for_each_word(uint64_t alphabet, uint32_t length, Visit&& visit) {
  std::vector<uint32_t> word(length, 0);
  while (true) {
    visit(word);
    uint32_t pos = length;
    while (pos > 0) {
      --pos;
      if (++word[pos] < alphabet) break;
      word[pos] = 0;
      if (pos == 0) return;
    }
    if (length == 0) return;
  }
}

enum class SymbolClass { Gen, Prop, Kill };

SymbolClass classify_symbol(const Gpk& gpk, uint64_t symbol) {
  if (symbol < gpk.gen) return SymbolClass::Gen;
  if (symbol < gpk.gen + gpk.prop) return SymbolClass::Prop;
  return SymbolClass::Kill;
}

}  // namespace

mpz_class brute_count_cascade_free(const Gpk& gpk, uint32_t length,
                                   uint64_t budget) {
  checked_word_count(gpk.alphabet(), length, budget);
  mpz_class count = 0;
  for_each_word(gpk.alphabet(), length, [&](const std::vector<uint32_t>& word) {
    uint32_t state = 0;
    for (uint32_t symbol : word) {
      switch (classify_symbol(gpk, symbol)) {
        case SymbolClass::Gen: state = 1; break;
        case SymbolClass::Prop:
          if (state == 1) return;  // a pass-through received a set state
          break;
        case SymbolClass::Kill: state = 0; break;
      }
    }
    ++count;
  });
  return count;
}

mpz_class brute_count_adjacency(const Gpk& gpk, uint32_t length,
                                uint64_t budget) {
  checked_word_count(gpk.alphabet(), length, budget);
  mpz_class count = 0;
  for_each_word(gpk.alphabet(), length, [&](const std::vector<uint32_t>& word) {
    for (size_t i = 0; i + 1 < word.size(); ++i) {
      if (classify_symbol(gpk, word[i]) == SymbolClass::Gen &&
          classify_symbol(gpk, word[i + 1]) == SymbolClass::Prop) {
        return;
      }
    }
    ++count;
  });
  return count;
}

mpz_class brute_count_avoiding(const StatefulOperation& op, uint32_t length,
                               uint64_t budget) {
  checked_word_count(op.alphabet, length, budget);
  mpz_class count = 0;
  for_each_word(op.alphabet, length, [&](const std::vector<uint32_t>& word) {
    uint32_t state = op.initial;
    for (uint32_t symbol : word) {
      state = op.apply(symbol, state);
      if (state == op.forbidden) return;
    }
    ++count;
  });
  return count;
}

namespace {

uint64_t mix64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

}  // namespace

uint64_t counter_rng(uint64_t seed, uint64_t stream, uint64_t counter) {
  uint64_t z = mix64(seed + 0x9e3779b97f4a7c15ull * (stream + 1));
  z = mix64(z + 0x9e3779b97f4a7c15ull * (counter + 1));
  return z;
}

MonteCarloEstimate monte_carlo_dispersion(const Gpk& gpk, uint32_t length,
                                          uint64_t samples, uint64_t seed) {
  if (samples < 2) fail(ErrorCode::InvalidArgument, "need at least two samples");
  if (length == 0) fail(ErrorCode::InvalidArgument, "need positive length");
  const uint64_t n_symbols = gpk.alphabet();
  std::vector<uint64_t> nu(samples);
  double s1 = 0, s2 = 0;
  for (uint64_t i = 0; i < samples; ++i) {
    uint32_t state = 0;
    uint64_t ones = 0;
    for (uint32_t pos = 0; pos < length; ++pos) {
      const uint64_t symbol = counter_rng(seed, i, pos) % n_symbols;
      switch (classify_symbol(gpk, symbol)) {
        case SymbolClass::Gen: state = 1; break;
        case SymbolClass::Prop: break;
        case SymbolClass::Kill: state = 0; break;
      }
      if (state == 1) ++ones;
    }
    nu[i] = ones;
    s1 += static_cast<double>(ones);
    s2 += static_cast<double>(ones) * static_cast<double>(ones);
  }
  if (s1 == 0) {
    fail(ErrorCode::DegenerateDistribution, "all sampled counts are zero");
  }
  const double n = static_cast<double>(samples);
  MonteCarloEstimate est;
  est.samples = samples;
  est.mean = s1 / n;
  est.variance = (s2 - s1 * s1 / n) / (n - 1);
  est.dispersion = est.variance / est.mean;
  // Leave-one-out replicates from the two running sums.
  double mean_acc = 0, var_acc = 0, disp_acc = 0;
  std::vector<double> mean_i(samples), var_i(samples), disp_i(samples);
  for (uint64_t i = 0; i < samples; ++i) {
    const double x = static_cast<double>(nu[i]);
    const double m = (s1 - x) / (n - 1);
    const double v = (s2 - x * x - (s1 - x) * (s1 - x) / (n - 1)) / (n - 2);
    const double d = m > 0 ? v / m : 0;
    mean_i[i] = m;
    var_i[i] = v;
    disp_i[i] = d;
    mean_acc += m;
    var_acc += v;
    disp_acc += d;
  }
  mean_acc /= n;
  var_acc /= n;
  disp_acc /= n;
  double mean_sq = 0, var_sq = 0, disp_sq = 0;
  for (uint64_t i = 0; i < samples; ++i) {
    mean_sq += (mean_i[i] - mean_acc) * (mean_i[i] - mean_acc);
    var_sq += (var_i[i] - var_acc) * (var_i[i] - var_acc);
    disp_sq += (disp_i[i] - disp_acc) * (disp_i[i] - disp_acc);
  }
  const double scale = (n - 1) / n;
  est.mean_se = std::sqrt(scale * mean_sq);
  est.variance_se = std::sqrt(scale * var_sq);
  est.dispersion_se = std::sqrt(scale * disp_sq);
  return est;
}

}  // namespace cascade
