#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pheis/qseries.hpp"

namespace pheis {

/// Exact Bernoulli number B_k (recurrence with memoization; desk-scale cap
/// k <= 2000).  Defined for k = 0 and even k >= 2; odd or negative k rejected.
Rational bernoulli(long k);

/// sigma_e(n) = sum_{d | n} d^e.
Integer sigma_power(long e, long n);

/// sigma*_e(n) = sum_{d | n, p does not divide d} d^e.
Integer sigma_star(long e, long n, const Prime& p);

/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, exact to q^D.  E_2, E_4, E_6
/// are the quasimodular generators P, Q, R.
QSeries eisenstein(long k, int D);

struct SupNorm {
  NormValue value;
  int window = 0;  // coefficients q^0..q^window were inspected
};

/// Sup over stored coefficients of |a_n|_p; a lower bound for the full
/// sup-norm, certified over the recorded window.
SupNorm sup_norm(const QSeries& f, const Prime& p);

// A weight chain k_0 < k_1 < ... driving Kummer-style convergence of
// Eisenstein series: each step satisfies k_{i+1} = k_i mod (p-1)p^i, all
// weights even, and (for p >= 5) k_i != 0 mod (p-1).
class KummerChain {
 public:
  KummerChain(const Prime& p, std::vector<long> weights);

  const Prime& prime() const { return p_; }
  const std::vector<long>& weights() const { return weights_; }
  int steps() const { return static_cast<int>(weights_.size()) - 1; }
  /// Exact congruence depth N_i of step i: (p-1)p^{N_i} divides k_{i+1}-k_i.
  int congruence_depth(int i) const;

 private:
  Prime p_;
  std::vector<long> weights_;
  std::vector<int> depth_;
};

struct KummerGap {
  NormValue measured;    // sup-norm of E_{k_{i+1}} - E_{k_i} over q^1..q^D
  int window = 0;
  NormValue predicted;   // p^{-(N_i + 1)} from the step's congruence depth
};

KummerGap kummer_gap(const KummerChain& chain, int i, int D);

struct EisensteinStarCoeff {
  enum class Status { Ok, InsufficientChain };
  Status status = Status::InsufficientChain;
  Rational value;      // stabilized coefficient, meaningful mod p^precision
  int precision = 0;
  NormValue last_gap;  // last observed consecutive difference
};

/// q^n coefficient of E_k* as the stabilized value of the chain coefficients
/// -(2 k_i / B_{k_i}) sigma_{k_i - 1}(n), certified mod p^target_precision.
/// n = 0 returns 1 exactly.
EisensteinStarCoeff eisenstein_star_coeff(const KummerChain& chain, long n,
                                          int target_precision);

struct QuasimodularMonomial {
  int a = 0, b = 0, c = 0;  // E2^a E4^b E6^c with 2a + 4b + 6c = weight
  std::string label() const;
};

/// Monomial basis of the weight-ell subspace of Q[E2, E4, E6], in a fixed
/// order (increasing E2-depth).
std::vector<QuasimodularMonomial> quasimodular_basis(int ell);

struct QuasimodularFit {
  enum class Status { Fit, NonMember, Underdetermined };
  Status status = Status::Underdetermined;
  int weight = 0;
  std::vector<QuasimodularMonomial> basis;
  std::vector<Rational> coeffs;  // aligned with basis when status != Underdetermined
  std::optional<QSeries> residual;  // f minus the fitted combination
};

/// Exact linear solve of f against the weight-ell monomial space on q^0..q^D.
/// Requires D >= dim + 5 (margin); a nonzero residual past the solve window
/// is reported as NonMember.
QuasimodularFit quasimodular_fit(const QSeries& f, int ell, int D);

}  // namespace pheis
