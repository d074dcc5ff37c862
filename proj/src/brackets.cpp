#include "pheis/brackets.hpp"

#include <stdexcept>

namespace pheis {

LaurentSeries::LaurentSeries(int offset, std::vector<Rational> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {}

Rational LaurentSeries::coeff(int e) const {
  if (e >= trunc()) throw std::out_of_range("LaurentSeries: coefficient beyond certified window");
  if (e < offset_) return Rational(0);
  return coeffs_[static_cast<std::size_t>(e - offset_)];
}

LaurentSeries LaurentSeries::exp_z(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(order, 0)));
  Rational term(1);
  for (int j = 0; j < order; ++j) {
    c[static_cast<std::size_t>(j)] = term;
    term /= (j + 1);
  }
  return LaurentSeries(0, std::move(c));
}

LaurentSeries LaurentSeries::expm1(int order) {
  LaurentSeries e = exp_z(order);
  if (order > 0) e.coeffs_[0] -= 1;
  return e;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  // exact window: [o1+o2, min(t1+o2, t2+o1))
  int off = offset_ + o.offset_;
  int tr = std::min(trunc() + o.offset_, o.trunc() + offset_);
  int len = std::max(tr - off, 0);
  std::vector<Rational> c(static_cast<std::size_t>(len));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      std::size_t k = i + j;
      if (k >= c.size()) break;
      c[k] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return LaurentSeries(off, std::move(c));
}

LaurentSeries LaurentSeries::pow(int k) const {
  if (k < 0) throw std::invalid_argument("LaurentSeries::pow: negative exponent");
  // window of x^k: offset k*o, certified to k*o + (t - o) like repeated mul
  const std::size_t len = std::max<std::size_t>(coeffs_.size(), 1);
  LaurentSeries acc(0, std::vector<Rational>(len, Rational(0)));
  acc.coeffs_[0] = 1;  // 1 certified to the operand's window length
  LaurentSeries base = *this;
  for (int i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

LaurentSeries LaurentSeries::inverse() const {
  // locate the valuation: series = z^{offset+v0} * unit
  std::size_t v0 = 0;
  while (v0 < coeffs_.size() && coeffs_[v0] == 0) ++v0;
  if (v0 == coeffs_.size()) {
    throw std::invalid_argument("LaurentSeries::inverse: series vanishes on its window");
  }
  const std::size_t len = coeffs_.size() - v0;
  const Rational& lead = coeffs_[v0];
  std::vector<Rational> inv(len);
  inv[0] = 1 / lead;
  for (std::size_t n = 1; n < len; ++n) {
    Rational s(0);
    for (std::size_t j = 1; j <= n; ++j) s += coeffs_[v0 + j] * inv[n - j];
    inv[n] = -s / lead;
  }
  return LaurentSeries(-(offset_ + static_cast<int>(v0)), std::move(inv));
}

LaurentSeries LaurentSeries::shifted(int d) const {
  LaurentSeries out = *this;
  out.offset_ += d;
  return out;
}

BracketCoeffTable bracket_coeff_table(int n, int dmax, int order_margin) {
  if (dmax < 0) throw std::invalid_argument("bracket_coeff_table: dmax must be >= 0");
  BracketCoeffTable table;
  table.n = n;
  table.dmax = dmax;
  // We must read [z^{-n-1}] from series with offset -m-1, m in [-dmax, dmax];
  // the largest relative index is m - n <= dmax + |n|.
  const int order = dmax + std::abs(n) + 2 + order_margin;
  table.series_order = order;

  const LaurentSeries ez = LaurentSeries::exp_z(order);
  const LaurentSeries u = LaurentSeries::expm1(order);
  // u / z is a unit power series; its inverse powers give the m >= 0 cases.
  const LaurentSeries v_inv = u.shifted(-1).inverse();

  for (int m = -dmax; m <= dmax; ++m) {
    LaurentSeries s = (m <= -1) ? u.pow(-m - 1) * ez
                                : (v_inv.pow(m + 1) * ez).shifted(-(m + 1));
    if (-n - 1 >= s.trunc()) throw std::logic_error("bracket_coeff_table: window too small");
    Rational c = s.coeff(-n - 1);
    if (c != 0) table.theta.emplace(m, std::move(c));
  }
  return table;
}

FockState apply_h_bracket(int n, const FockState& b) {
  if (b.is_zero()) return FockState::zero();
  const int dmax = std::max(std::abs(n), b.degree_or(0));
  const BracketCoeffTable table = bracket_coeff_table(n, dmax);
  FockState out;
  for (const auto& [m, theta] : table.theta) {
    if (m > b.degree_or(0)) break;  // h(m) kills everything present
    FockState h = apply_h(m, b);
    if (h.is_zero()) continue;
    h *= theta;
    out += h;
  }
  return out;
}

FockState apply_bracket_L0(const FockState& b) {
  FockState out = apply_L(0, b);
  const int d = b.degree_or(0);
  for (int n = 1; n <= d; ++n) {
    FockState ln = apply_L(n, b);
    if (ln.is_zero()) continue;
    Rational c(1, static_cast<long>(n) * (n + 1));
    if (n % 2 == 0) c = -c;
    ln *= c;
    out += ln;
  }
  return out;
}

FockState apply_bracket_Lm1(const FockState& b) {
  return apply_L(0, b) + apply_L(-1, b);
}

FockState omega_tilde() {
  FockState out = FockState::monomial(Partition({1, 1}), Rational(1, 2));
  out.add_term(Partition::vacuum(), Rational(-1, 24));
  return out;
}

FockState bracket_lift(const FockState& v) {
  if (v.is_zero()) return v;
  auto deg = v.homogeneous_degree();
  if (!deg) throw std::invalid_argument("bracket_lift: state is not L(0)-homogeneous");
  const int ell = *deg;

  // L[0] = L(0) + (strictly degree-lowering part), so the eigen equation
  // solves triangularly: (ell - d) a_d = sum_{n>=1} c_n L(n) a_{d+n}.
  std::vector<FockState> comp(static_cast<std::size_t>(ell) + 1);
  comp[static_cast<std::size_t>(ell)] = v;
  for (int d = ell - 1; d >= 0; --d) {
    FockState rhs;
    for (int n = 1; n <= ell - d; ++n) {
      const FockState& src = comp[static_cast<std::size_t>(d + n)];
      if (src.is_zero()) continue;
      FockState ln = apply_L(n, src);
      if (ln.is_zero()) continue;
      Rational c(1, static_cast<long>(n) * (n + 1));
      if (n % 2 == 0) c = -c;
      ln *= c;
      rhs += ln;
    }
    rhs *= Rational(1, ell - d);
    comp[static_cast<std::size_t>(d)] = std::move(rhs);
  }
  FockState out;
  for (const auto& c : comp) out += c;
  return out;
}

}  // namespace pheis
