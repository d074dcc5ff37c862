#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pheis/mode_operator.hpp"
#include "pheis/modforms.hpp"
#include "pheis/spectral.hpp"

namespace pheis {

/// Graded character of the Fock space: sum p(n) q^n (the q-part of 1/eta).
QSeries eta_inverse(int D);

/// The q-part of eta: prod_{n>=1} (1 - q^n), exact to q^D.
QSeries eta_q(int D);

// Slice traces of zero modes, computed through the normal-ordered operator
// expansions (the matrix route restricted to its diagonal); memoized per
// basis monomial.  One engine serves every state at a fixed q-window.
class TraceEngine {
 public:
  explicit TraceEngine(int qmax);

  int qmax() const { return qmax_; }

  /// Tr over the degree-d slice of o(h^monomial), exact.
  const Rational& slice_trace(const Partition& monomial, int d);

  /// sum_d Tr_{V_d} o(a) q^d to q^qmax, o extended by linearity over
  /// homogeneous components.
  QSeries trace_series(const FockState& a);

 private:
  int qmax_;
  ModeExpansionCache cache_;
  std::map<Partition, ModeOperator, PartitionOrder> diagonal_;
  std::map<std::pair<Partition, int>, Rational> traces_;
};

/// Z(a) = eta(q) F(a) with the q^{+-1/24} prefactors cancelled symbolically;
/// an exact element of Q[[q]] to q^D.
QSeries z_series(TraceEngine& engine, const FockState& a);
QSeries z_series(const FockState& a, int D);

struct TraceReport {
  std::string state;
  int qmax = 0;
  QSeries series{0};
  std::optional<QuasimodularFit> fit;
};

/// Lifts v to its L[0]-eigenstate, computes Z, and fits it against the
/// weight-deg(v) quasimodular monomial space.
TraceReport graded_check(const FockState& v, int D);
TraceReport graded_check(TraceEngine& engine, const FockState& v);

struct ZLimit {
  enum class Status { Ok, NotCauchy };
  Status status = Status::NotCauchy;
  int witness = -1;               // offending gap when NotCauchy
  QSeries values{0};              // Z of the last state
  NormValue tail_bound;           // last state-gap sup-norm: per-coefficient error
  std::vector<NormValue> state_gaps;
  std::vector<NormValue> series_gaps;  // observed |Z_{i+1} - Z_i| sup-norms
};

/// Desk-scale model of the extension of Z to the completion: coefficient-wise
/// stabilized values with the error bound inherited from the Cauchy moduli.
ZLimit z_limit(const std::vector<FockState>& states, int D, const Prime& p);

}  // namespace pheis
