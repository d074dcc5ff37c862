#include "pheis/modes.hpp"

#include <stdexcept>

namespace pheis {

FockState apply_h(int n, const FockState& b) {
  FockState out;
  if (n == 0) return out;  // h(0) acts as zero in the uncharged sector
  if (n < 0) {
    for (const auto& [p, c] : b.terms()) out.add_term(p.with_part(-n), c);
    return out;
  }
  for (const auto& [p, c] : b.terms()) {
    int mult = p.multiplicity(n);
    if (mult == 0) continue;
    out.add_term(*p.without_part(n), Rational(static_cast<long>(n) * mult) * c);
  }
  return out;
}

namespace {

// :h(i)h(j): applied to a single basis partition; annihilators act first.
void add_normal_pair(FockState& out, int i, int j, const Partition& p, const Rational& c) {
  int lo = std::min(i, j);
  int hi = std::max(i, j);
  Rational coeff = c;
  Partition cur = p;
  // apply annihilators (positive indices), largest-first order is irrelevant
  for (int k : {hi, lo}) {
    if (k > 0) {
      int mult = cur.multiplicity(k);
      if (mult == 0) return;
      coeff *= Rational(static_cast<long>(k) * mult);
      cur = *cur.without_part(k);
    }
  }
  for (int k : {hi, lo}) {
    if (k < 0) cur = cur.with_part(-k);
  }
  out.add_term(cur, coeff);
}

}  // namespace

FockState apply_L(int n, const FockState& b) {
  FockState out;
  const Rational half(1, 2);
  for (const auto& [p, c] : b.terms()) {
    int d = p.weight();
    for (int i = n - d; i <= d; ++i) {
      int j = n - i;
      if (i == 0 || j == 0) continue;
      add_normal_pair(out, i, j, p, half * c);
    }
  }
  return out;
}

const FockState& ModeCalculator::monomial_mode(const Partition& a, int t, const Partition& b) {
  auto key = std::make_tuple(a, t, b);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  FockState out;
  if (a.empty()) {
    if (t == -1) out = FockState::monomial(b);
  } else {
    const int n = a.parts().front();
    const Partition w = a.tail();
    // creation half: sum_{i>=0} C(n+i-1,i) h(-n-i) (w(t+i) b)
    const int imax = w.weight() + b.weight() - 1 - t;
    for (int i = 0; i <= imax; ++i) {
      const FockState& inner = monomial_mode(w, t + i, b);
      if (inner.is_zero()) continue;
      Rational coeff(binomial(n + i - 1, i));
      for (const auto& [p, c] : inner.terms()) {
        out.add_term(p.with_part(n + i), coeff * c);
      }
    }
    // annihilation half: -(-1)^n sum_{i>=1} C(n+i-1,i) w(t-n-i) (h(i) b)
    const Rational sign((n % 2 == 0) ? -1 : 1);
    const auto& parts = b.parts();
    for (std::size_t k = 0; k < parts.size();) {
      const int i = parts[k];
      std::size_t k2 = k;
      while (k2 < parts.size() && parts[k2] == i) ++k2;
      const int mult = static_cast<int>(k2 - k);
      const FockState& inner = monomial_mode(w, t - n - i, *b.without_part(i));
      if (!inner.is_zero()) {
        Rational coeff = sign * Rational(binomial(n + i - 1, i)) *
                         Rational(static_cast<long>(i) * mult);
        FockState scaled = inner;
        scaled *= coeff;
        out += scaled;
      }
      k = k2;
    }
  }
  auto [ins, ok] = memo_.emplace(std::move(key), std::move(out));
  (void)ok;
  return ins->second;
}

FockState ModeCalculator::mode_product(const FockState& a, int t, const FockState& b) {
  FockState out;
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      const FockState& m = monomial_mode(pa, t, pb);
      if (m.is_zero()) continue;
      FockState scaled = m;
      scaled *= ca * cb;
      out += scaled;
    }
  }
  return out;
}

FockState mode_product(const FockState& a, int t, const FockState& b) {
  ModeCalculator calc;
  return calc.mode_product(a, t, b);
}

FockState zero_mode_apply(const FockState& a, const FockState& b) {
  ModeCalculator calc;
  FockState out;
  for (const auto& [deg, comp] : a.components()) {
    out += calc.mode_product(comp, deg - 1, b);
  }
  return out;
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m;
  m.rows = m.cols = n;
  m.entries.assign(static_cast<std::size_t>(n) * n, Rational(0));
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FockState jacobi_residual(const FockState& a, const FockState& b, const FockState& c,
                          int r, int s, int t) {
  FockState residual;
  if (a.is_zero() || b.is_zero() || c.is_zero()) return residual;
  ModeCalculator calc;

  const int da = *a.degree(), db = *b.degree(), dc = *c.degree();

  // LHS: sum_i C(r,i) (a(t+i)b)(r+s-i) c
  {
    int imax = da + db - t - 1;          // a(t+i)b vanishes beyond this
    if (r >= 0) imax = std::min(imax, r);  // C(r,i) = 0 for i > r
    for (int i = 0; i <= imax; ++i) {
      Rational coeff(binomial_general(r, i));
      if (coeff == 0) continue;
      FockState ab = calc.mode_product(a, t + i, b);
      if (ab.is_zero()) continue;
      FockState term = calc.mode_product(ab, r + s - i, c);
      term *= coeff;
      residual += term;
    }
  }
  // RHS: sum_i (-1)^i C(t,i) { a(r+t-i) b(s+i) c - (-1)^t b(s+t-i) a(r+i) c }
  {
    int i1max = db + dc - s - 1;  // b(s+i)c vanishes beyond
    int i2max = da + dc - r - 1;  // a(r+i)c vanishes beyond
    int imax = std::max(i1max, i2max);
    if (t >= 0) imax = std::min(imax, t);
    const Rational tsign((t % 2 == 0) ? 1 : -1);
    for (int i = 0; i <= imax; ++i) {
      Rational coeff(binomial_general(t, i));
      if (coeff == 0) continue;
      if (i % 2 == 1) coeff = -coeff;
      if (i <= i1max) {
        FockState inner = calc.mode_product(b, s + i, c);
        if (!inner.is_zero()) {
          FockState term = calc.mode_product(a, r + t - i, inner);
          term *= coeff;
          residual -= term;
        }
      }
      if (i <= i2max) {
        FockState inner = calc.mode_product(a, r + i, c);
        if (!inner.is_zero()) {
          FockState term = calc.mode_product(b, s + t - i, inner);
          term *= coeff * tsign;
          residual += term;
        }
      }
    }
  }
  return residual;
}

}  // namespace pheis
