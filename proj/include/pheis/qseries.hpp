#pragma once

#include <vector>

#include "pheis/rational.hpp"

namespace pheis {

// Truncated formal q-expansion with exact rational coefficients q^0..q^D.
// Arithmetic closes at the smaller truncation of the operands.
class QSeries {
 public:
  explicit QSeries(int truncation);
  QSeries(int truncation, std::vector<Rational> coeffs);

  static QSeries one(int truncation);

  int truncation() const { return trunc_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational coeff(int i) const;
  void set_coeff(int i, Rational v);

  bool is_zero() const;

  QSeries truncated(int D) const;
  /// q d/dq: multiplies the q^n coefficient by n.
  QSeries q_dq() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& c);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.trunc_ == b.trunc_ && a.c_ == b.c_;
  }

 private:
  int trunc_;
  std::vector<Rational> c_;
};

}  // namespace pheis
