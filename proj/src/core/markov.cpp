#include "core/markov.hpp"

#include <cmath>

namespace cascade {

namespace {

void require_mixing(const Gpk& gpk) {
  if (gpk.gen + gpk.kill == 0) {
    fail(ErrorCode::DegenerateChain,
         "every symbol passes the state through; the chain never mixes");
  }
}

mpq_class q_u64(uint64_t num, uint64_t den) {
  return make_q(mpz_class(static_cast<unsigned long>(num)),
                mpz_class(static_cast<unsigned long>(den)));
}

}  // namespace

MarkovChain markov_chain(const Gpk& gpk) {
  require_mixing(gpk);
  const uint64_t n = gpk.alphabet();
  MarkovChain chain;
  chain.mu = q_u64(gpk.prop, n);
  chain.pi0 = q_u64(gpk.kill, gpk.gen + gpk.kill);
  chain.pi1 = q_u64(gpk.gen, gpk.gen + gpk.kill);
  chain.rows[0][0] = q_u64(gpk.prop + gpk.kill, n);
  chain.rows[0][1] = q_u64(gpk.gen, n);
  chain.rows[1][0] = q_u64(gpk.kill, n);
  chain.rows[1][1] = q_u64(gpk.gen + gpk.prop, n);
  chain.correlation_length =
      gpk.prop == 0
          ? 0.0
          : 1.0 / std::log(static_cast<double>(n) / static_cast<double>(gpk.prop));
  return chain;
}

mpq_class autocorrelation(const Gpk& gpk, uint32_t lag) {
  require_mixing(gpk);
  return pow_q(q_u64(gpk.prop, gpk.alphabet()), lag);
}

PropagationRates expected_propagation(const Gpk& gpk) {
  require_mixing(gpk);
  PropagationRates rates;
  // P(symbol is prop) * P(state set when it arrives) in stationarity.
  rates.ratio = q_u64(gpk.gen, gpk.gen + gpk.kill);
  rates.per_position = q_u64(gpk.prop, gpk.alphabet()) * rates.ratio;
  return rates;
}

namespace {

MomentReport finish_report(mpq_class mean, mpq_class variance, Regime regime) {
  if (mean == 0) {
    fail(ErrorCode::DegenerateDistribution,
         "expected count is zero; dispersion undefined");
  }
  MomentReport report;
  report.dispersion = variance / mean;
  report.mean = std::move(mean);
  report.variance = std::move(variance);
  report.regime = regime;
  return report;
}

}  // namespace

MomentReport stationary_moments(const Gpk& gpk, uint32_t length) {
  if (length == 0) fail(ErrorCode::InvalidArgument, "need positive length");
  const MarkovChain chain = markov_chain(gpk);
  const mpq_class& mu = chain.mu;
  const mpq_class one = 1;
  const mpq_class mean = mpq_class(length) * chain.pi1;
  // Var = pi1 pi0 [ L (1+mu)/(1-mu) - 2 mu (1-mu^L) / (1-mu)^2 ]
  const mpq_class omm = one - mu;  // positive: mixing guarantees mu < 1
  const mpq_class bracket = mpq_class(length) * (one + mu) / omm -
                            2 * mu * (one - pow_q(mu, length)) / (omm * omm);
  return finish_report(mean, chain.pi1 * chain.pi0 * bracket, Regime::Stationary);
}

MomentReport transient_moments(const Gpk& gpk, uint32_t length) {
  if (length == 0) fail(ErrorCode::InvalidArgument, "need positive length");
  const MarkovChain chain = markov_chain(gpk);
  const mpq_class& mu = chain.mu;
  const mpq_class one = 1;
  // From the clear state, P(position k set) = pi1 (1 - mu^k).
  std::vector<mpq_class> p(length);
  std::vector<mpq_class> mu_pow(length + 1);
  mu_pow[0] = 1;
  for (uint32_t k = 1; k <= length; ++k) mu_pow[k] = mu_pow[k - 1] * mu;
  mpq_class mean = 0, variance = 0;
  for (uint32_t k = 1; k <= length; ++k) {
    p[k - 1] = chain.pi1 * (one - mu_pow[k]);
    mean += p[k - 1];
    variance += p[k - 1] * (one - p[k - 1]);
  }
  // Cov(sigma_j, sigma_k) = pi1 (1-mu^j) mu^(k-j) (pi0 + pi1 mu^j); summing the
  // inner geometric part in closed form keeps the evaluation linear in L.
  if (mu != 0) {
    const mpq_class omm = one - mu;
    for (uint32_t j = 1; j < length; ++j) {
      const mpq_class geom = mu * (one - mu_pow[length - j]) / omm;
      variance += 2 * chain.pi1 * (one - mu_pow[j]) *
                  (chain.pi0 + chain.pi1 * mu_pow[j]) * geom;
    }
  }
  return finish_report(mean, variance, Regime::Transient);
}

mpq_class asymptotic_dispersion(const Gpk& gpk) {
  require_mixing(gpk);
  if (gpk.gen == 0) {
    fail(ErrorCode::DegenerateDistribution,
         "no generating symbols; the count is identically zero");
  }
  const mpz_class gk(static_cast<unsigned long>(gpk.gen + gpk.kill));
  const mpz_class num = mpz_class(static_cast<unsigned long>(gpk.kill)) *
                        mpz_class(static_cast<unsigned long>(gpk.gen + gpk.kill +
                                                             2 * gpk.prop));
  return make_q(num, gk * gk);
}

}  // namespace cascade
