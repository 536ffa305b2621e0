#include "core/counting.hpp"

#include <cmath>
#include <limits>

namespace cascade {

Gpk::Gpk(uint64_t g, uint64_t t, uint64_t k) : gen(g), prop(t), kill(k) {
  if (g > kMaxClassSize || t > kMaxClassSize || k > kMaxClassSize) {
    fail(ErrorCode::InvalidArgument, "class size exceeds 1e9");
  }
  if (g + t + k == 0) {
    fail(ErrorCode::InvalidArgument, "alphabet must be non-empty");
  }
}

mpz_class Gpk::discriminant() const {
  mpz_class n = mpz_class(alphabet());
  return n * n - 4 * mpz_class(gen) * mpz_class(prop);
}

mpz_class TransferMatrix2::determinant() const {
  return mpz_class(entries[0][0]) * mpz_class(entries[1][1]) -
         mpz_class(entries[0][1]) * mpz_class(entries[1][0]);
}

TransferMatrix2 build_transfer_matrix(const Gpk& gpk) {
  TransferMatrix2 m;
  // From rest: kill and prop keep the state clear, gen sets it.
  m.entries[0][0] = gpk.kill + gpk.prop;
  m.entries[0][1] = gpk.gen;
  // From set: prop would receive the set state, so only kill (clears) and
  // gen (re-sets) are allowed.
  m.entries[1][0] = gpk.kill;
  m.entries[1][1] = gpk.gen;
  return m;
}

Counts count_cascade_free(const Gpk& gpk, uint32_t length) {
  const mpz_class n(gpk.alphabet());
  const mpz_class det = mpz_class(gpk.gen) * mpz_class(gpk.prop);
  Counts a;
  a.reserve(length + 1);
  a.push_back(1);
  if (length >= 1) a.push_back(n);
  for (uint32_t i = 2; i <= length; ++i) {
    a.push_back(n * a[i - 1] - det * a[i - 2]);
  }
  return a;
}

namespace {

// Coefficients of 1 / (denom[0] + denom[1] z + ...) up to z^length;
// denom[0] must be 1.
Counts series_reciprocal(const std::vector<mpz_class>& denom, uint32_t length) {
  if (denom.empty() || denom[0] != 1) {
    fail(ErrorCode::InvalidArgument, "series reciprocal needs unit constant term");
  }
  Counts c(length + 1);
  c[0] = 1;
  for (uint32_t n = 1; n <= length; ++n) {
    mpz_class acc = 0;
    const uint32_t top = std::min<uint32_t>(n, denom.size() - 1);
    for (uint32_t i = 1; i <= top; ++i) acc += denom[i] * c[n - i];
    c[n] = -acc;
  }
  return c;
}

}  // namespace

Counts gf_coefficients(const Gpk& gpk, uint32_t length) {
  std::vector<mpz_class> denom{1, -mpz_class(gpk.alphabet()),
                               mpz_class(gpk.gen) * mpz_class(gpk.prop)};
  return series_reciprocal(denom, length);
}

mpq_class cascade_free_density(const Gpk& gpk, uint32_t length) {
  Counts a = count_cascade_free(gpk, length);
  return make_q(a[length], pow_z(mpz_class(gpk.alphabet()), length));
}

SpectralData spectral_data(const Gpk& gpk) {
  SpectralData s;
  s.trace = mpz_class(gpk.alphabet());
  s.determinant = mpz_class(gpk.gen) * mpz_class(gpk.prop);
  s.discriminant = s.trace * s.trace - 4 * s.determinant;
  const double n = s.trace.get_d();
  const double disc = s.discriminant.get_d();
  const double root = std::sqrt(disc);
  s.lambda_plus = (n + root) / 2;
  s.lambda_minus = (n - root) / 2;
  s.degenerate = (s.discriminant == 0);
  if (s.determinant == 0) {
    s.infinite_coupling = true;
    s.coupling = std::numeric_limits<double>::infinity();
  } else {
    s.coupling = n / (2 * std::sqrt(s.determinant.get_d()));
  }
  return s;
}

double chebyshev_u(uint32_t n, double x) {
  double prev = 1;          // U_0
  if (n == 0) return prev;
  double cur = 2 * x;       // U_1
  for (uint32_t i = 2; i <= n; ++i) {
    double next = 2 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

ChebyshevReport verify_chebyshev_representation(const Gpk& gpk, uint32_t length,
                                                double tolerance) {
  if (gpk.determinant() == 0) {
    fail(ErrorCode::NotApplicable,
         "Chebyshev representation needs gen*prop > 0");
  }
  const SpectralData s = spectral_data(gpk);
  const Counts exact = count_cascade_free(gpk, length);
  const double sqrt_det = std::sqrt(s.determinant.get_d());
  ChebyshevReport report;
  double scale = 1;  // (sqrt(det))^L, advanced incrementally
  for (uint32_t ell = 0; ell <= length; ++ell) {
    const double approx = scale * chebyshev_u(ell, s.coupling);
    const double ref = exact[ell].get_d();
    const double rel = std::abs(approx - ref) / ref;
    if (rel > report.max_rel_error) report.max_rel_error = rel;
    scale *= sqrt_det;
  }
  report.pass = report.max_rel_error <= tolerance;
  return report;
}

}  // namespace cascade
