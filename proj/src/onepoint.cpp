#include "pheis/onepoint.hpp"

#include <stdexcept>

namespace pheis {

QSeries eta_inverse(int D) {
  auto p = partition_numbers(D);
  QSeries out(D);
  for (int n = 0; n <= D; ++n) out.set_coeff(n, Rational(p[static_cast<std::size_t>(n)]));
  return out;
}

QSeries eta_q(int D) {
  QSeries out = QSeries::one(D);
  for (int n = 1; n <= D; ++n) {
    QSeries factor = QSeries::one(D);
    factor.set_coeff(n, Rational(-1));
    out = out * factor;
  }
  return out;
}

TraceEngine::TraceEngine(int qmax) : qmax_(qmax), cache_(qmax) {
  if (qmax < 0) throw std::invalid_argument("TraceEngine: negative q-window");
}

const Rational& TraceEngine::slice_trace(const Partition& monomial, int d) {
  auto key = std::make_pair(monomial, d);
  auto it = traces_.find(key);
  if (it != traces_.end()) return it->second;

  auto dit = diagonal_.find(monomial);
  if (dit == diagonal_.end()) {
    dit = diagonal_.emplace(monomial, cache_.zero_mode(monomial).diagonal_part()).first;
  }
  Rational total(0);
  for (const Partition& mu : partition_basis(d)) {
    total += dit->second.diagonal_entry(mu);
  }
  return traces_.emplace(std::move(key), std::move(total)).first->second;
}

QSeries TraceEngine::trace_series(const FockState& a) {
  QSeries out(qmax_);
  for (const auto& [mono, c] : a.terms()) {
    for (int d = 0; d <= qmax_; ++d) {
      out.set_coeff(d, out.coeff(d) + c * slice_trace(mono, d));
    }
  }
  return out;
}

QSeries z_series(TraceEngine& engine, const FockState& a) {
  return eta_q(engine.qmax()) * engine.trace_series(a);
}

QSeries z_series(const FockState& a, int D) {
  TraceEngine engine(D);
  return z_series(engine, a);
}

TraceReport graded_check(TraceEngine& engine, const FockState& v) {
  auto deg = v.homogeneous_degree();
  if (!deg && !v.is_zero()) {
    throw std::invalid_argument("graded_check: state is not L(0)-homogeneous");
  }
  TraceReport out;
  out.state = v.to_string();
  out.qmax = engine.qmax();
  FockState lifted = bracket_lift(v);
  out.series = z_series(engine, lifted);
  out.fit = quasimodular_fit(out.series, deg ? *deg : 0, engine.qmax());
  return out;
}

TraceReport graded_check(const FockState& v, int D) {
  TraceEngine engine(D);
  return graded_check(engine, v);
}

ZLimit z_limit(const std::vector<FockState>& states, int D, const Prime& p) {
  if (states.empty()) throw std::invalid_argument("z_limit: empty sequence");
  ZLimit out;

  CauchyReport cauchy = cauchy_verify(states, p, RExponent::sup_norm());
  out.state_gaps = cauchy.gaps;
  if (cauchy.verdict == CauchyReport::Verdict::NotCauchy) {
    out.status = ZLimit::Status::NotCauchy;
    out.witness = cauchy.witness;
    return out;
  }

  TraceEngine engine(D);
  std::vector<QSeries> zs;
  zs.reserve(states.size());
  for (const FockState& a : states) zs.push_back(z_series(engine, a));

  for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
    out.series_gaps.push_back(sup_norm(zs[i + 1] - zs[i], p).value);
  }
  out.status = ZLimit::Status::Ok;
  out.values = zs.back();
  out.tail_bound = out.state_gaps.empty() ? NormValue::zero() : out.state_gaps.back();
  return out;
}

}  // namespace pheis
