#include "pheis/modforms.hpp"

#include <mutex>
#include <stdexcept>

namespace pheis {

namespace {

constexpr long kBernoulliCap = 2000;

// Shared table of B_0..B_max, grown on demand.
const Rational& bernoulli_entry(long k) {
  static std::mutex mu;
  static std::vector<Rational> table;  // table[j] = B_j
  std::scoped_lock lock(mu);
  if (table.empty()) {
    table.push_back(Rational(1));                // B_0
    table.push_back(Rational(-1, 2));            // B_1
  }
  while (static_cast<long>(table.size()) <= k) {
    const long m = static_cast<long>(table.size());
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational s(0);
    for (long j = 0; j < m; ++j) {
      if (j >= 3 && j % 2 == 1) continue;  // odd Bernoullis vanish
      s += Rational(binomial(m + 1, j)) * table[static_cast<std::size_t>(j)];
    }
    table.push_back(-s / Rational(m + 1));
  }
  return table[static_cast<std::size_t>(k)];
}

}  // namespace

Rational bernoulli(long k) {
  if (k == 0) return Rational(1);
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("bernoulli: k must be 0 or even >= 2");
  if (k > kBernoulliCap) throw std::invalid_argument("bernoulli: beyond desk-scale cap");
  return bernoulli_entry(k);
}

Integer sigma_power(long e, long n) {
  if (n < 1) throw std::invalid_argument("sigma_power: n must be >= 1");
  Integer s(0);
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(e));
    s += t;
  }
  return s;
}

Integer sigma_star(long e, long n, const Prime& p) {
  if (n < 1) throw std::invalid_argument("sigma_star: n must be >= 1");
  Integer s(0);
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0 || d % p.value() == 0) continue;
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(e));
    s += t;
  }
  return s;
}

QSeries eisenstein(long k, int D) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("eisenstein: k must be even >= 2");
  QSeries out = QSeries::one(D);
  const Rational factor = Rational(-2 * k) / bernoulli(k);
  for (int n = 1; n <= D; ++n) {
    out.set_coeff(n, factor * Rational(sigma_power(k - 1, n)));
  }
  return out;
}

SupNorm sup_norm(const QSeries& f, const Prime& p) {
  SupNorm out;
  out.value = NormValue::zero();
  out.window = f.truncation();
  for (const Rational& c : f.coeffs()) {
    out.value = NormValue::max(out.value, padic_norm(c, p));
  }
  return out;
}

KummerChain::KummerChain(const Prime& p, std::vector<long> weights)
    : p_(p), weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("KummerChain: empty weight list");
  const long pm1 = p_.value() - 1;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    long k = weights_[i];
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("KummerChain: weights must be even >= 2");
    if (k > kBernoulliCap) throw std::invalid_argument("KummerChain: weight beyond desk-scale cap");
    // Serre's nonvanishing condition; degenerate for p = 2, 3 where p-1 | k
    // always holds for even k.
    if (p_.value() >= 5 && k % pm1 == 0) {
      throw std::invalid_argument("KummerChain: weight = 0 mod (p-1) not allowed");
    }
    if (i > 0 && weights_[i - 1] >= k) {
      throw std::invalid_argument("KummerChain: weights must increase");
    }
  }
  for (std::size_t i = 0; i + 1 < weights_.size(); ++i) {
    long diff = weights_[i + 1] - weights_[i];
    if (diff % pm1 != 0) {
      throw std::invalid_argument("KummerChain: step not divisible by p-1");
    }
    auto v = padic_valuation(Integer(diff), p_);
    int depth = static_cast<int>(*v);
    if (depth < static_cast<int>(i)) {
      throw std::invalid_argument("KummerChain: step congruence below required depth");
    }
    depth_.push_back(depth);
  }
}

int KummerChain::congruence_depth(int i) const {
  if (i < 0 || i >= static_cast<int>(depth_.size())) {
    throw std::out_of_range("KummerChain: step index out of range");
  }
  return depth_[static_cast<std::size_t>(i)];
}

KummerGap kummer_gap(const KummerChain& chain, int i, int D) {
  if (i < 0 || i >= chain.steps()) throw std::out_of_range("kummer_gap: step index out of range");
  const QSeries a = eisenstein(chain.weights()[static_cast<std::size_t>(i)], D);
  const QSeries b = eisenstein(chain.weights()[static_cast<std::size_t>(i) + 1], D);
  QSeries diff = b - a;
  KummerGap out;
  out.window = D;
  out.measured = NormValue::zero();
  for (int n = 1; n <= D; ++n) {
    out.measured = NormValue::max(out.measured, padic_norm(diff.coeff(n), chain.prime()));
  }
  out.predicted = NormValue::from_exponent(Rational(chain.congruence_depth(i) + 1));
  return out;
}

EisensteinStarCoeff eisenstein_star_coeff(const KummerChain& chain, long n,
                                          int target_precision) {
  if (n < 0) throw std::invalid_argument("eisenstein_star_coeff: n must be >= 0");
  if (target_precision < 1) throw std::invalid_argument("eisenstein_star_coeff: precision must be >= 1");
  EisensteinStarCoeff out;
  out.precision = target_precision;
  if (n == 0) {
    out.status = EisensteinStarCoeff::Status::Ok;
    out.value = Rational(1);
    out.last_gap = NormValue::zero();
    return out;
  }
  if (chain.steps() < 1) {
    out.status = EisensteinStarCoeff::Status::InsufficientChain;
    return out;
  }
  std::vector<Rational> values;
  for (long k : chain.weights()) {
    values.push_back(Rational(-2 * k) / bernoulli(k) * Rational(sigma_power(k - 1, n)));
  }
  const Prime& p = chain.prime();
  NormValue last_gap = padic_norm(values.back() - values[values.size() - 2], p);
  out.last_gap = last_gap;
  out.value = values.back();

  // Certification: the final observed gap and the predicted continuation
  // gap (depth grows by at least one per step) must both reach p^-m.
  const NormValue target = NormValue::from_exponent(Rational(target_precision));
  const int next_depth = chain.congruence_depth(chain.steps() - 1) + 1;
  const bool continuation_ok = next_depth + 1 >= target_precision;
  if (norm_leq(last_gap, target) && continuation_ok) {
    out.status = EisensteinStarCoeff::Status::Ok;
  } else {
    out.status = EisensteinStarCoeff::Status::InsufficientChain;
  }
  return out;
}

std::string QuasimodularMonomial::label() const {
  if (a == 0 && b == 0 && c == 0) return "1";
  std::string s;
  auto piece = [&s](const char* name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  };
  piece("E2", a);
  piece("E4", b);
  piece("E6", c);
  return s;
}

std::vector<QuasimodularMonomial> quasimodular_basis(int ell) {
  if (ell < 0) throw std::invalid_argument("quasimodular_basis: negative weight");
  std::vector<QuasimodularMonomial> out;
  if (ell % 2 != 0) return out;  // odd weights: empty space
  for (int a = 0; 2 * a <= ell; ++a) {
    for (int b = 0; 2 * a + 4 * b <= ell; ++b) {
      int rem = ell - 2 * a - 4 * b;
      if (rem % 6 != 0) continue;
      out.push_back(QuasimodularMonomial{a, b, rem / 6});
    }
  }
  return out;
}

QuasimodularFit quasimodular_fit(const QSeries& f, int ell, int D) {
  if (D > f.truncation()) throw std::invalid_argument("quasimodular_fit: window beyond series truncation");
  QuasimodularFit out;
  out.weight = ell;
  out.basis = quasimodular_basis(ell);
  const int dim = static_cast<int>(out.basis.size());
  if (D < dim + 5) {
    out.status = QuasimodularFit::Status::Underdetermined;
    return out;
  }

  std::vector<QSeries> monos;
  monos.reserve(static_cast<std::size_t>(dim));
  const QSeries e2 = eisenstein(2, D);
  const QSeries e4 = eisenstein(4, D);
  const QSeries e6 = eisenstein(6, D);
  for (const auto& m : out.basis) {
    QSeries s = QSeries::one(D);
    for (int i = 0; i < m.a; ++i) s = s * e2;
    for (int i = 0; i < m.b; ++i) s = s * e4;
    for (int i = 0; i < m.c; ++i) s = s * e6;
    monos.push_back(std::move(s));
  }

  // RREF of the augmented system over rows q^0..q^D.
  const int rows = D + 1;
  std::vector<std::vector<Rational>> aug(static_cast<std::size_t>(rows),
                                         std::vector<Rational>(static_cast<std::size_t>(dim) + 1));
  for (int r = 0; r < rows; ++r) {
    for (int j = 0; j < dim; ++j) aug[r][static_cast<std::size_t>(j)] = monos[static_cast<std::size_t>(j)].coeff(r);
    aug[r][static_cast<std::size_t>(dim)] = f.coeff(r);
  }
  int pivot_row = 0;
  std::vector<int> pivot_of_col(static_cast<std::size_t>(dim), -1);
  for (int col = 0; col < dim && pivot_row < rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { sel = r; break; }
    }
    if (sel < 0) continue;
    std::swap(aug[static_cast<std::size_t>(sel)], aug[static_cast<std::size_t>(pivot_row)]);
    auto& prow = aug[static_cast<std::size_t>(pivot_row)];
    const Rational inv = 1 / prow[static_cast<std::size_t>(col)];
    for (auto& x : prow) x *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      const Rational factor = aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int j = col; j <= dim; ++j) {
        aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
            factor * prow[static_cast<std::size_t>(j)];
      }
    }
    pivot_of_col[static_cast<std::size_t>(col)] = pivot_row;
    ++pivot_row;
  }
  if (pivot_row < dim) {
    out.status = QuasimodularFit::Status::Underdetermined;
    return out;
  }

  out.coeffs.assign(static_cast<std::size_t>(dim), Rational(0));
  for (int j = 0; j < dim; ++j) {
    out.coeffs[static_cast<std::size_t>(j)] =
        aug[static_cast<std::size_t>(pivot_of_col[static_cast<std::size_t>(j)])][static_cast<std::size_t>(dim)];
  }

  QSeries residual = f.truncated(D);
  for (int j = 0; j < dim; ++j) {
    QSeries scaled = monos[static_cast<std::size_t>(j)];
    scaled *= out.coeffs[static_cast<std::size_t>(j)];
    residual -= scaled;
  }
  out.status = residual.is_zero() ? QuasimodularFit::Status::Fit
                                  : QuasimodularFit::Status::NonMember;
  out.residual = std::move(residual);
  return out;
}

}  // namespace pheis
