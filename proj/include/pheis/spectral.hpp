#pragma once

#include <optional>
#include <vector>

#include "pheis/brackets.hpp"
#include "pheis/fock.hpp"

namespace pheis {

// A target eigenvalue: an exact rational, or a p-adic integer known only
// through its first m base-p digits.  Digit-based targets make every derived
// quantity certified only to p^-m.
class PadicTarget {
 public:
  static PadicTarget rational(const Prime& p, Rational lambda);
  /// digits least significant first; precision = digits.size().
  static PadicTarget from_digits(const Prime& p, const std::vector<int>& digits);

  const Prime& prime() const { return p_; }
  bool is_rational() const { return rational_.has_value(); }
  const Rational& rational_value() const { return *rational_; }
  /// Representative of the target mod p^precision (digit targets only).
  const Integer& representative() const { return rep_; }
  std::optional<int> precision() const { return precision_; }

  /// A rational standing in for the target in exact arithmetic: the value
  /// itself, or the digit representative.
  Rational working_value() const;

  /// True when the target equals the integer m as far as it is known.
  bool matches_integer(long m) const;

 private:
  PadicTarget(const Prime& p, std::optional<Rational> r, Integer rep,
              std::optional<int> precision)
      : p_(p), rational_(std::move(r)), rep_(std::move(rep)), precision_(precision) {}
  Prime p_;
  std::optional<Rational> rational_;
  Integer rep_;
  std::optional<int> precision_;
};

/// (L(0) - lambda)^{-1} a for rational lambda outside the point spectrum
/// Z_{>=0}: scales the degree-m component by 1/(m - lambda).  Exact.
FockState resolvent_apply(const PadicTarget& lambda, const FockState& a);

struct ProfileEntry {
  NormValue value;  // 1/|m - lambda| (or the best bound when short)
  bool precision_short = false;
};

struct ResolventProfile {
  std::vector<ProfileEntry> entries;  // m = 0..mmax
  NormValue max_value;                // largest certain entry
  int precision_short_count = 0;
};

ResolventProfile resolvent_norm_profile(const PadicTarget& lambda, int mmax);

struct CauchyReport {
  enum class Verdict { CauchyAtRate, NotCauchy };
  Verdict verdict = Verdict::NotCauchy;
  std::vector<NormValue> gaps;    // |a_{i+1} - a_i|_rho
  // Largest r with gap_i <= p^{-(i*r)} (1-based steps); absent when every
  // gap vanishes (constant tail, rate unbounded).
  std::optional<Rational> rate;
  int witness = -1;               // offending step when NotCauchy
};

CauchyReport cauchy_verify(const std::vector<FockState>& states, const Prime& p,
                           const RExponent& rho);

struct EigenResidual {
  NormValue value;        // |L[0]a - lambda a|_rho, or the certified bound
  bool certified = true;  // false = precision-short (digit targets)
  NormValue uncertainty;  // p^-m |a|_rho contribution for digit targets
};

/// Exact for rational targets; for digit targets the measurement is certified
/// only when it exceeds the representative's uncertainty.
EigenResidual eigen_residual(const FockState& a, const PadicTarget& lambda,
                             const RExponent& rho);

}  // namespace pheis
