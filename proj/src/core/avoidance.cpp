#include "core/avoidance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cascade {

StatefulOperation StatefulOperation::make(uint32_t states, uint32_t alphabet,
                                          std::vector<uint32_t> table,
                                          uint32_t forbidden, uint32_t initial) {
  if (states < 2) fail(ErrorCode::InvalidArgument, "need at least two states");
  if (alphabet == 0) fail(ErrorCode::InvalidArgument, "alphabet must be non-empty");
  if (static_cast<uint64_t>(states) * alphabet > kMaxTableEntries) {
    fail(ErrorCode::InvalidArgument, "transition table too large");
  }
  if (table.size() != static_cast<size_t>(states) * alphabet) {
    fail(ErrorCode::InvalidArgument, "transition table has wrong size");
  }
  for (uint32_t next : table) {
    if (next >= states) fail(ErrorCode::InvalidArgument, "transition target out of range");
  }
  if (forbidden >= states) fail(ErrorCode::InvalidArgument, "forbidden state out of range");
  if (initial >= states) fail(ErrorCode::InvalidArgument, "initial state out of range");
  if (initial == forbidden) {
    fail(ErrorCode::InvalidArgument, "initial state may not be the forbidden state");
  }
  StatefulOperation op;
  op.states = states;
  op.alphabet = alphabet;
  op.table = std::move(table);
  op.forbidden = forbidden;
  op.initial = initial;
  return op;
}

RestrictedMatrix restricted_matrix(const StatefulOperation& op) {
  RestrictedMatrix m;
  for (uint32_t s = 0; s < op.states; ++s) {
    if (s != op.forbidden) m.kept.push_back(s);
  }
  m.dim = static_cast<uint32_t>(m.kept.size());
  m.entries.assign(static_cast<size_t>(m.dim) * m.dim, 0);
  std::vector<int32_t> kept_index(op.states, -1);
  for (uint32_t i = 0; i < m.dim; ++i) kept_index[m.kept[i]] = static_cast<int32_t>(i);
  for (uint32_t x = 0; x < op.alphabet; ++x) {
    for (uint32_t i = 0; i < m.dim; ++i) {
      const uint32_t next = op.apply(x, m.kept[i]);
      const int32_t j = kept_index[next];
      if (j >= 0) ++m.entries[static_cast<size_t>(i) * m.dim + j];
    }
  }
  return m;
}

CharPoly char_poly(const RestrictedMatrix& m) {
  const uint32_t n = m.dim;
  // Faddeev-LeVerrier: M_1 = M, c_k = -tr(M_k)/k, M_{k+1} = M (M_k + c_k I).
  std::vector<mpz_class> mk(static_cast<size_t>(n) * n);
  std::vector<mpz_class> coeffs{1};
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) mk[i * n + j] = mpz_class(m.at(i, j));
  }
  for (uint32_t k = 1; k <= n; ++k) {
    mpz_class tr = 0;
    for (uint32_t i = 0; i < n; ++i) tr += mk[i * n + i];
    mpz_class ck;
    mpz_class rem;
    mpz_fdiv_qr_ui(ck.get_mpz_t(), rem.get_mpz_t(), tr.get_mpz_t(), k);
    if (rem != 0) fail(ErrorCode::Internal, "characteristic polynomial trace not divisible");
    ck = -ck;
    coeffs.push_back(ck);
    if (k == n) break;
    std::vector<mpz_class> b = mk;
    for (uint32_t i = 0; i < n; ++i) b[i * n + i] += ck;
    for (uint32_t i = 0; i < n; ++i) {
      for (uint32_t j = 0; j < n; ++j) {
        mpz_class acc = 0;
        for (uint32_t l = 0; l < n; ++l) acc += mpz_class(m.at(i, l)) * b[l * n + j];
        mk[i * n + j] = acc;
      }
    }
  }
  return CharPoly{std::move(coeffs)};
}

Counts count_avoiding(const StatefulOperation& op, uint32_t length) {
  const RestrictedMatrix m = restricted_matrix(op);
  std::vector<mpz_class> v(m.dim, 0);
  for (uint32_t i = 0; i < m.dim; ++i) {
    if (m.kept[i] == op.initial) v[i] = 1;
  }
  Counts out;
  out.reserve(length + 1);
  auto total = [&] {
    mpz_class acc = 0;
    for (const mpz_class& e : v) acc += e;
    return acc;
  };
  out.push_back(total());
  std::vector<mpz_class> next(m.dim);
  for (uint32_t step = 1; step <= length; ++step) {
    for (uint32_t j = 0; j < m.dim; ++j) {
      mpz_class acc = 0;
      for (uint32_t i = 0; i < m.dim; ++i) {
        if (v[i] != 0) acc += v[i] * mpz_class(m.at(i, j));
      }
      next[j] = acc;
    }
    v.swap(next);
    out.push_back(total());
  }
  return out;
}

Counts extend_by_recurrence(const CharPoly& poly, const Counts& seed,
                            uint32_t length) {
  const uint32_t d = poly.degree();
  if (d == 0) fail(ErrorCode::InvalidArgument, "recurrence of degree zero");
  Counts out(seed.begin(),
             seed.begin() + std::min<size_t>(seed.size(), length + 1));
  if (out.size() == length + 1u) return out;
  if (seed.size() < d) {
    fail(ErrorCode::SeedTooShort, "recurrence of degree " + std::to_string(d) +
                                      " needs " + std::to_string(d) + " seed values");
  }
  for (size_t n = out.size(); n <= length; ++n) {
    mpz_class acc = 0;
    for (uint32_t i = 1; i <= d; ++i) acc -= poly.coeffs[i] * out[n - i];
    out.push_back(acc);
  }
  return out;
}

Counts count_by_recurrence(const StatefulOperation& op, uint32_t length) {
  const RestrictedMatrix m = restricted_matrix(op);
  const CharPoly poly = char_poly(m);
  const uint32_t d = poly.degree();
  const Counts seed = count_avoiding(op, std::min<uint32_t>(length, d > 0 ? d - 1 : 0));
  return extend_by_recurrence(poly, seed, length);
}

UniversalityReport universality_equal(const StatefulOperation& a,
                                      const StatefulOperation& b,
                                      uint32_t length) {
  const RestrictedMatrix ma = restricted_matrix(a);
  const RestrictedMatrix mb = restricted_matrix(b);
  if (ma.dim != mb.dim) {
    fail(ErrorCode::StateCountMismatch,
         "restricted dimensions differ: " + std::to_string(ma.dim) + " vs " +
             std::to_string(mb.dim));
  }
  UniversalityReport report;
  const CharPoly pa = char_poly(ma);
  const CharPoly pb = char_poly(mb);
  report.charpoly_equal = (pa.coeffs == pb.coeffs);
  const Counts ca = count_avoiding(a, length);
  const Counts cb = count_avoiding(b, length);
  report.counts_equal = (ca == cb);
  report.seeds_equal = true;
  const uint32_t d = pa.degree();
  for (uint32_t i = 0; i < d && i <= length; ++i) {
    if (ca[i] != cb[i]) report.seeds_equal = false;
  }
  return report;
}

SpectralData spectral_data_restricted(const StatefulOperation& op) {
  if (op.states != 3) {
    fail(ErrorCode::NotApplicable, "coupling form needs exactly three states");
  }
  const RestrictedMatrix m = restricted_matrix(op);
  SpectralData s;
  s.trace = mpz_class(m.at(0, 0)) + mpz_class(m.at(1, 1));
  s.determinant = mpz_class(m.at(0, 0)) * mpz_class(m.at(1, 1)) -
                  mpz_class(m.at(0, 1)) * mpz_class(m.at(1, 0));
  s.discriminant = s.trace * s.trace - 4 * s.determinant;
  if (s.determinant <= 0) {
    fail(ErrorCode::NotApplicable,
         "restricted determinant must be positive, got " +
             s.determinant.get_str());
  }
  const double tr = s.trace.get_d();
  const double root = std::sqrt(s.discriminant.get_d());
  s.lambda_plus = (tr + root) / 2;
  s.lambda_minus = (tr - root) / 2;
  s.degenerate = (s.discriminant == 0);
  s.coupling = tr / (2 * std::sqrt(s.determinant.get_d()));
  return s;
}

Gpk classify_gpk(const StatefulOperation& op) {
  if (op.states != 2) {
    fail(ErrorCode::NotBinaryState, "classification needs exactly two states");
  }
  uint64_t g = 0, t = 0, k = 0;
  for (uint32_t x = 0; x < op.alphabet; ++x) {
    const uint32_t from0 = op.apply(x, 0);
    const uint32_t from1 = op.apply(x, 1);
    if (from0 == 1 && from1 == 1) ++g;
    else if (from0 == 0 && from1 == 1) ++t;
    else if (from0 == 0 && from1 == 0) ++k;
    else {
      fail(ErrorCode::NegationPresent,
           "symbol " + std::to_string(x) + " negates the state");
    }
  }
  return Gpk(g, t, k);
}

StatefulOperation lift_gpk(const Gpk& gpk) {
  const uint64_t n = gpk.alphabet();
  if (n > (1ull << 20)) {
    fail(ErrorCode::InvalidArgument, "alphabet too large to materialize");
  }
  const uint32_t alphabet = static_cast<uint32_t>(n);
  std::vector<uint32_t> table(static_cast<size_t>(alphabet) * 3);
  for (uint32_t x = 0; x < alphabet; ++x) {
    const bool is_gen = x < gpk.gen;
    const bool is_prop = !is_gen && x < gpk.gen + gpk.prop;
    table[x * 3 + 0] = is_gen ? 1 : 0;
    table[x * 3 + 1] = is_gen ? 1 : (is_prop ? 2 : 0);
    table[x * 3 + 2] = 2;
  }
  return StatefulOperation::make(3, alphabet, std::move(table), 2, 0);
}

}  // namespace cascade
