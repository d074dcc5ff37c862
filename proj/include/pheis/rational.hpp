#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pheis {

// All coefficient arithmetic in the library is exact over Q.  GMP supplies
// the bignum machinery; Rational values are kept canonical (reduced, positive
// denominator) by mpq.
using Rational = mpq_class;
using Integer = mpz_class;

/// A validated prime, used as the ambient context for all p-adic notions.
class Prime {
 public:
  explicit Prime(long p);

  long value() const { return p_; }
  Rational as_rational() const { return Rational(p_); }

  friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }

 private:
  long p_;
};

/// p-adic valuation of x: the r with x = p^r * (unit).  nullopt encodes
/// +infinity, the valuation of 0.
std::optional<long> padic_valuation(const Rational& x, const Prime& p);
std::optional<long> padic_valuation(const Integer& x, const Prime& p);

// An ultrametric norm value p^(-e), stored through its exponent e (a rational,
// or +infinity for the norm of 0).  Exponents are exact so norm comparisons
// are exact rational comparisons with the order reversed.
class NormValue {
 public:
  /// Default-constructs the norm of 0 (exponent +infinity).
  NormValue() = default;

  // norm of 0 (exponent +infinity)
  static NormValue zero() { return NormValue(std::nullopt); }
  // norm 1 = p^0
  static NormValue one() { return NormValue(Rational(0)); }
  static NormValue from_exponent(Rational e) { return NormValue(std::move(e)); }

  bool is_zero() const { return !exp_.has_value(); }
  /// Exponent e with norm = p^(-e); nullopt means +infinity.
  const std::optional<Rational>& exponent() const { return exp_; }

  /// Multiplicativity: exponents add.
  friend NormValue operator*(const NormValue& a, const NormValue& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return NormValue(*a.exp_ + *b.exp_);
  }

  friend bool operator==(const NormValue& a, const NormValue& b) {
    return a.exp_ == b.exp_;
  }
  friend bool operator!=(const NormValue& a, const NormValue& b) = default;

  /// Norm-value order: |.| = p^(-e) so bigger exponent means smaller norm.
  friend bool norm_less(const NormValue& a, const NormValue& b) {
    if (a.is_zero()) return !b.is_zero();
    if (b.is_zero()) return false;
    return *a.exp_ > *b.exp_;
  }
  friend bool norm_leq(const NormValue& a, const NormValue& b) {
    return !norm_less(b, a);
  }
  static NormValue max(const NormValue& a, const NormValue& b) {
    return norm_less(a, b) ? b : a;
  }

  /// Renders as "p^(-e)", "p^0", or "0".
  std::string to_string(const Prime& p) const;

 private:
  explicit NormValue(std::optional<Rational> e) : exp_(std::move(e)) {}
  std::optional<Rational> exp_;
};

/// |x|_p = p^(-v_p(x)).
NormValue padic_norm(const Rational& x, const Prime& p);

/// Always "num/den" (e.g. "4/1", "-1/12"); the canonical serialized form.
std::string to_fraction_string(const Rational& x);

/// Accepts "num/den" and plain integers; throws std::invalid_argument on
/// malformed input.
Rational rational_from_string(std::string_view s);

/// Residue of x mod p^m for p-integral x (v_p(x) >= 0), in [0, p^m).
Integer rational_residue_mod(const Rational& x, const Prime& p, int m);

/// Binomial coefficient C(n, k) for n >= 0, 0 <= k (zero when k > n).
Integer binomial(long n, long k);

/// Generalized binomial C(r, k) for any integer r and k >= 0; an integer.
Integer binomial_general(long r, long k);

}  // namespace pheis
