#pragma once

#include <optional>
#include <vector>

#include "pheis/rational.hpp"

namespace pheis {

// Serre's weight space X of p-adic weights: for odd p a pair
// (residue mod p-1, body in Z_p); for p = 2 just the body.  The body is kept
// either exactly (integer weights and exact limits) or as a representative
// known modulo p^precision.
class WeightX {
 public:
  /// Embeds an integer weight: residue = k mod (p-1) for odd p, body = k.
  static WeightX from_integer(long k, const Prime& p);

  /// A weight known only modulo p^precision (residue required for odd p).
  static WeightX approximate(const Prime& p, std::optional<long> residue,
                             Integer body, int precision);

  const Prime& prime() const { return p_; }
  /// Residue class mod p-1; absent when p = 2.
  const std::optional<long>& residue() const { return residue_; }
  /// Representative of the body; exact integer when precision() is absent.
  const Integer& body() const { return body_; }
  /// Known precision m (body determined mod p^m); absent = exact.
  const std::optional<int>& precision() const { return precision_; }

  bool is_exact() const { return !precision_.has_value(); }

  /// Membership in even weight space 2X.  For odd p this is decidable from
  /// the residue alone (2 is a unit in Z_p); for p = 2 it needs the last
  /// binary digit of the body.
  bool is_even() const;

  /// Base-p digits d_0..d_{m-1} of the body (least significant first).
  /// Requires m within the known precision.
  std::vector<int> digits(int m) const;

 private:
  WeightX(const Prime& p, std::optional<long> residue, Integer body,
          std::optional<int> precision);

  Prime p_;
  std::optional<long> residue_;
  Integer body_;
  std::optional<int> precision_;
};

struct WeightDistance {
  NormValue bound;
  // False when the distance is only an upper bound limited by the operands'
  // precision.
  bool exact = true;
};

/// Distance in X: 1 when the residues differ, else |body - body'|_p to the
/// shared precision.
WeightDistance weight_distance(const WeightX& a, const WeightX& b);

struct WeightLimit {
  bool ok = false;
  std::optional<WeightX> limit;
  // First index i where d(k_i, k_{i+1}) <= p^{-(i+1)} fails (when !ok).
  int violating_index = -1;
};

/// Verifies the Cauchy pace d(k_i, k_{i+1}) <= p^{-(i+1)} and returns the
/// limit to the precision certified by the last observed gap.
WeightLimit weight_limit(const std::vector<long>& ks, const Prime& p);

}  // namespace pheis
