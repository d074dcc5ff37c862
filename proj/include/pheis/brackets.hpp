#pragma once

#include <map>
#include <vector>

#include "pheis/modes.hpp"

namespace pheis {

// Exact truncated Laurent series in z over Q.  Coefficients are stored for
// exponents in [offset, trunc) and are exact there; arithmetic tracks the
// resulting certified window.
class LaurentSeries {
 public:
  LaurentSeries(int offset, std::vector<Rational> coeffs);

  int offset() const { return offset_; }
  /// Exclusive upper bound of the certified exponent window.
  int trunc() const { return offset_ + static_cast<int>(coeffs_.size()); }

  /// Coefficient of z^e; exact for e < trunc(), throws beyond the window.
  Rational coeff(int e) const;

  /// e^z with coefficients certified below `order`.
  static LaurentSeries exp_z(int order);
  /// e^z - 1, same window.
  static LaurentSeries expm1(int order);

  LaurentSeries operator*(const LaurentSeries& o) const;
  /// Nonnegative power (empty product = 1 certified to this window).
  LaurentSeries pow(int k) const;
  /// Multiplicative inverse; the lowest stored coefficient must be nonzero.
  LaurentSeries inverse() const;
  /// Multiply by z^d.
  LaurentSeries shifted(int d) const;

 private:
  int offset_;
  std::vector<Rational> coeffs_;
};

// Round-bracket expansion coefficients of the square-bracket mode h[n]:
// h[n] = sum_m theta(n, m) h(m) with
// theta(n, m) = [z^{-n-1}] (e^z - 1)^{-m-1} e^z.
// Creation support is exactly m in [n, -1]; annihilation support is complete
// for all m <= dmax (enough for states of degree <= dmax).
struct BracketCoeffTable {
  int n = 0;
  int dmax = 0;
  int series_order = 0;  // truncation order the table was computed at
  std::map<int, Rational> theta;

  Rational coeff(int m) const {
    auto it = theta.find(m);
    return it == theta.end() ? Rational(0) : it->second;
  }
};

/// theta(n, m) for all m with -dmax <= m <= dmax, exact.
BracketCoeffTable bracket_coeff_table(int n, int dmax, int order_margin = 8);

/// h[n] b = sum_m theta(n, m) h(m) b, a finite exact sum.
FockState apply_h_bracket(int n, const FockState& b);

/// L[0] = L(0) + sum_{n>=1} ((-1)^{n+1} / (n(n+1))) L(n); finite on any state.
FockState apply_bracket_L0(const FockState& b);

/// L[-1] = L(0) + L(-1).
FockState apply_bracket_Lm1(const FockState& b);

/// The conformal vector of the square-bracket VOA, omega - (c/24) 1 with c=1.
FockState omega_tilde();

/// The unique L[0]-eigenstate v + (lower-degree corrections) with eigenvalue
/// deg(v), for L(0)-homogeneous v; obtained by the triangular solve down the
/// degree filtration.
FockState bracket_lift(const FockState& v);

}  // namespace pheis
