#include "pheis/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace pheis {

QSeries::QSeries(int truncation) : trunc_(truncation) {
  if (truncation < 0) throw std::invalid_argument("QSeries: negative truncation");
  c_.assign(static_cast<std::size_t>(truncation) + 1, Rational(0));
}

QSeries::QSeries(int truncation, std::vector<Rational> coeffs) : QSeries(truncation) {
  if (coeffs.size() > c_.size()) throw std::invalid_argument("QSeries: too many coefficients");
  std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

QSeries QSeries::one(int truncation) {
  QSeries s(truncation);
  s.c_[0] = 1;
  return s;
}

Rational QSeries::coeff(int i) const {
  if (i < 0 || i > trunc_) throw std::out_of_range("QSeries: coefficient out of window");
  return c_[static_cast<std::size_t>(i)];
}

void QSeries::set_coeff(int i, Rational v) {
  if (i < 0 || i > trunc_) throw std::out_of_range("QSeries: coefficient out of window");
  c_[static_cast<std::size_t>(i)] = std::move(v);
}

bool QSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

QSeries QSeries::truncated(int D) const {
  if (D > trunc_) throw std::invalid_argument("QSeries: cannot extend certified window");
  QSeries out(D);
  std::copy(c_.begin(), c_.begin() + D + 1, out.c_.begin());
  return out;
}

QSeries QSeries::q_dq() const {
  QSeries out(trunc_);
  for (int i = 0; i <= trunc_; ++i) out.c_[static_cast<std::size_t>(i)] = Rational(i) * c_[static_cast<std::size_t>(i)];
  return out;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (o.trunc_ < trunc_) *this = truncated(o.trunc_);
  for (int i = 0; i <= trunc_; ++i) c_[static_cast<std::size_t>(i)] += o.c_[static_cast<std::size_t>(i)];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (o.trunc_ < trunc_) *this = truncated(o.trunc_);
  for (int i = 0; i <= trunc_; ++i) c_[static_cast<std::size_t>(i)] -= o.c_[static_cast<std::size_t>(i)];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& v) {
  for (auto& x : c_) x *= v;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  int D = std::min(a.trunc_, b.trunc_);
  QSeries out(D);
  for (int i = 0; i <= D; ++i) {
    if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= D; ++j) {
      if (b.c_[static_cast<std::size_t>(j)] == 0) continue;
      out.c_[static_cast<std::size_t>(i + j)] +=
          a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

}  // namespace pheis
