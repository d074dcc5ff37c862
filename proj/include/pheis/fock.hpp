#pragma once

#include <map>
#include <optional>
#include <string>

#include "pheis/partition.hpp"
#include "pheis/rational.hpp"

namespace pheis {

// Exponent rho with R = p^rho, the weight of the R-norm |a|_R = sup |a_I| R^{|I|}.
// rho = 0 recovers the sup-norm on the Fock space.  The spectral-grade constructor
// enforces 1/p < rho < 1/(p-1), the window in which L[0] acts continuously on
// the R-completion.
class RExponent {
 public:
  explicit RExponent(Rational rho);
  static RExponent sup_norm() { return RExponent(Rational(0)); }
  static RExponent spectral(Rational rho, const Prime& p);

  const Rational& rho() const { return rho_; }
  bool spectral_grade() const { return spectral_grade_; }

 private:
  RExponent(Rational rho, bool spectral) : rho_(std::move(rho)), spectral_grade_(spectral) {}
  Rational rho_;
  bool spectral_grade_ = false;
};

// A state of S_alg: a finite Q-linear combination of partition basis vectors.
// Zero coefficients are never stored; equality is map equality.
class FockState {
 public:
  using TermMap = std::map<Partition, Rational, PartitionOrder>;

  FockState() = default;

  static FockState zero() { return FockState(); }
  static FockState vacuum() { return monomial(Partition::vacuum()); }
  static FockState monomial(const Partition& p, const Rational& c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Max weight of occurring partitions; nullopt for the zero state.
  std::optional<int> degree() const;
  int degree_or(int fallback) const;

  Rational coeff(const Partition& p) const;
  void add_term(const Partition& p, const Rational& c);

  bool is_homogeneous() const;
  /// Degree when homogeneous and nonzero; nullopt otherwise.
  std::optional<int> homogeneous_degree() const;

  /// The degree-d component.
  FockState component(int d) const;
  /// Components by degree, nonzero only.
  std::map<int, FockState> components() const;

  FockState& operator+=(const FockState& o);
  FockState& operator-=(const FockState& o);
  FockState& operator*=(const Rational& c);

  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend FockState operator*(const Rational& c, FockState a) { return a *= c; }
  friend bool operator==(const FockState& a, const FockState& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// |a|_R with R = p^rho: exponent min over terms of (v_p(a_I) - |I| rho).
NormValue r_norm(const FockState& a, const Prime& p, const RExponent& rho);

// Finite model of an element of the completion: a body of degree <= degree_cap
// plus a certified R-norm bound on the discarded tail.
struct TruncatedState {
  FockState body;
  int degree_cap = 0;
  NormValue tail_bound = NormValue::zero();
};

TruncatedState truncate(const FockState& a, int degree_cap, const Prime& p,
                        const RExponent& rho);

}  // namespace pheis
