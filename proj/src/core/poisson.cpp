#include "core/poisson.hpp"

#include <cmath>

namespace cascade {

namespace {

void require_mu(const mpq_class& mu, bool allow_zero) {
  if (mu < 0 || mu >= 1 || (!allow_zero && mu == 0)) {
    fail(ErrorCode::InvalidMu, "memory parameter must lie in [0, 1): got " +
                                   mu.get_str());
  }
}

}  // namespace

mpq_class symmetric_dispersion_limit(const mpq_class& mu) {
  require_mu(mu, true);
  return (1 + mu) / (2 * (1 - mu));
}

mpq_class marginal_dispersion(const mpq_class& mu, uint32_t k) {
  require_mu(mu, true);
  if (k == 0) fail(ErrorCode::InvalidArgument, "marginal index must be positive");
  return symmetric_dispersion_limit(mu) * (1 - pow_q(mu, k));
}

mpq_class symmetric_dispersion(const mpq_class& mu, uint32_t length) {
  require_mu(mu, true);
  if (length == 0) fail(ErrorCode::InvalidArgument, "need positive length");
  mpq_class weight_sum = 0, weighted = 0;
  mpq_class mu_pow = 1;
  for (uint32_t k = 1; k <= length; ++k) {
    mu_pow *= mu;
    const mpq_class w = 1 - mu_pow;
    weight_sum += w;
    weighted += w * w;
  }
  return symmetric_dispersion_limit(mu) * weighted / weight_sum;
}

PoissonRoot poisson_root(uint32_t length, double tol) {
  if (tol <= 0) tol = 1e-12;
  if (length < 2) {
    fail(ErrorCode::NoInteriorRoot,
         "D(1, mu) = (1+mu)/2 stays below 1 on the open interval");
  }
  auto residual_at = [&](double mu) {
    // Exact evaluation at the dyadic rational the double denotes.
    const mpq_class exact(mu);
    return to_double(symmetric_dispersion(exact, length) - 1);
  };
  double lo = 1.0 / 3.0;         // D < 1 here (D_inf(1/3) = 1, weights < 1)
  double hi = 1.0 - 1e-9;        // D > 1 here for every length >= 2
  if (residual_at(lo) >= 0 || residual_at(hi) <= 0) {
    fail(ErrorCode::Internal, "bracket does not straddle the root");
  }
  PoissonRoot root;
  root.length = length;
  root.tol = tol;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;  // bracket collapsed to adjacent doubles
    const double r = residual_at(mid);
    if (std::abs(r) <= tol) {
      root.mu_star = mid;
      root.residual = std::abs(r);
      return root;
    }
    if (r < 0) lo = mid;
    else hi = mid;
  }
  fail(ErrorCode::ToleranceNotMet,
       "bisection exhausted machine resolution before |D - 1| <= tol");
}

ExpansionCheck asymptotic_expansion_check(const mpq_class& mu, uint32_t length) {
  require_mu(mu, true);
  if (length == 0) fail(ErrorCode::InvalidArgument, "need positive length");
  ExpansionCheck check;
  check.exact = symmetric_dispersion(mu, length);
  const mpq_class correction =
      mu / (mpq_class(length) * (1 - mu) * (1 + mu));
  check.first_order = symmetric_dispersion_limit(mu) * (1 - correction);
  check.residual = check.exact - check.first_order;
  return check;
}

ScanReport monotonicity_scan(const std::vector<mpq_class>& grid,
                             uint32_t length_max) {
  if (length_max < 2) fail(ErrorCode::InvalidArgument, "need length_max >= 2");
  ScanReport report;
  auto expect = [&](bool ok, const std::string& what) {
    ++report.checks;
    if (!ok) report.failures.push_back(what);
  };
  for (const mpq_class& mu : grid) {
    require_mu(mu, false);
    const std::string tag = "mu=" + mu.get_str() + ": ";
    const mpq_class d_inf = symmetric_dispersion_limit(mu);
    mpq_class prev_marginal = 0;
    for (uint32_t k = 1; k <= length_max + 2u; ++k) {
      const mpq_class d_k = marginal_dispersion(mu, k);
      expect(d_k > prev_marginal,
             tag + "marginal not increasing at k=" + std::to_string(k));
      expect(d_k < d_inf, tag + "marginal not below limit at k=" + std::to_string(k));
      prev_marginal = d_k;
    }
    mpq_class prev_weighted = 0;
    for (uint32_t ell = 1; ell <= length_max; ++ell) {
      const mpq_class d_ell = symmetric_dispersion(mu, ell);
      expect(d_ell > prev_weighted,
             tag + "weighted dispersion not increasing at L=" + std::to_string(ell));
      expect(d_ell < marginal_dispersion(mu, ell + 1),
             tag + "weighted dispersion not below next marginal at L=" +
                 std::to_string(ell));
      prev_weighted = d_ell;
    }
    for (uint32_t ell = 1; ell <= length_max; ++ell) {
      const mpq_class lhs = marginal_dispersion(mu, ell + 2) -
                            marginal_dispersion(mu, ell + 1);
      const mpq_class rhs = pow_q(mu, ell + 1) * (1 + mu) / 2;
      expect(lhs == rhs, tag + "step identity fails at L=" + std::to_string(ell));
    }
  }
  return report;
}

}  // namespace cascade
