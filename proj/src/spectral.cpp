#include "pheis/spectral.hpp"

#include <stdexcept>

namespace pheis {

PadicTarget PadicTarget::rational(const Prime& p, Rational lambda) {
  return PadicTarget(p, std::move(lambda), Integer(0), std::nullopt);
}

PadicTarget PadicTarget::from_digits(const Prime& p, const std::vector<int>& digits) {
  if (digits.empty()) throw std::invalid_argument("PadicTarget: need at least one digit");
  Integer rep(0);
  Integer scale(1);
  for (int d : digits) {
    if (d < 0 || d >= p.value()) throw std::invalid_argument("PadicTarget: digit out of range");
    rep += scale * d;
    scale *= p.value();
  }
  return PadicTarget(p, std::nullopt, std::move(rep), static_cast<int>(digits.size()));
}

Rational PadicTarget::working_value() const {
  if (rational_) return *rational_;
  return Rational(rep_);
}

bool PadicTarget::matches_integer(long m) const {
  if (rational_) return *rational_ == m;
  Integer mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p_.value()),
                static_cast<unsigned long>(*precision_));
  Integer diff = (rep_ - m) % mod;
  return diff == 0;
}

FockState resolvent_apply(const PadicTarget& lambda, const FockState& a) {
  if (!lambda.is_rational()) {
    throw std::invalid_argument("resolvent_apply: target must be an exact rational");
  }
  const Rational& lam = lambda.rational_value();
  if (lam.get_den() == 1 && lam >= 0) {
    throw std::invalid_argument("resolvent_apply: lambda lies in the point spectrum Z_{>=0}");
  }
  FockState out;
  for (const auto& [part, c] : a.terms()) {
    out.add_term(part, c / (Rational(part.weight()) - lam));
  }
  return out;
}

ResolventProfile resolvent_norm_profile(const PadicTarget& lambda, int mmax) {
  if (mmax < 0) throw std::invalid_argument("resolvent_norm_profile: mmax must be >= 0");
  const Prime& p = lambda.prime();
  ResolventProfile out;
  out.max_value = NormValue::zero();
  for (int m = 0; m <= mmax; ++m) {
    ProfileEntry e;
    if (lambda.is_rational()) {
      Rational diff = Rational(m) - lambda.rational_value();
      if (diff == 0) {
        throw std::invalid_argument("resolvent_norm_profile: lambda hits the window");
      }
      // 1/|m - lambda| = p^{v(m - lambda)}
      e.value = NormValue::from_exponent(Rational(-*padic_valuation(diff, p)));
    } else {
      Integer mod;
      mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p.value()),
                    static_cast<unsigned long>(*lambda.precision()));
      Integer diff = (Integer(m) - lambda.representative()) % mod;
      if (diff < 0) diff += mod;
      if (diff == 0) {
        // |m - lambda| <= p^-m_prec, so the reciprocal is only bounded below.
        e.precision_short = true;
        e.value = NormValue::from_exponent(Rational(-*lambda.precision()));
        ++out.precision_short_count;
      } else {
        e.value = NormValue::from_exponent(Rational(-*padic_valuation(diff, p)));
      }
    }
    if (!e.precision_short) out.max_value = NormValue::max(out.max_value, e.value);
    out.entries.push_back(std::move(e));
  }
  return out;
}

CauchyReport cauchy_verify(const std::vector<FockState>& states, const Prime& p,
                           const RExponent& rho) {
  if (states.empty()) throw std::invalid_argument("cauchy_verify: empty sequence");
  CauchyReport out;
  for (std::size_t i = 0; i + 1 < states.size(); ++i) {
    out.gaps.push_back(r_norm(states[i + 1] - states[i], p, rho));
  }
  std::optional<Rational> rate;
  int witness = -1;
  for (std::size_t i = 0; i < out.gaps.size(); ++i) {
    const NormValue& g = out.gaps[i];
    if (g.is_zero()) continue;
    Rational r = *g.exponent() / Rational(static_cast<long>(i) + 1);
    if (!rate || r < *rate) {
      rate = r;
      witness = static_cast<int>(i);
    }
  }
  if (!rate) {
    out.verdict = CauchyReport::Verdict::CauchyAtRate;  // constant sequence
    return out;
  }
  if (*rate > 0) {
    out.verdict = CauchyReport::Verdict::CauchyAtRate;
    out.rate = rate;
  } else {
    out.verdict = CauchyReport::Verdict::NotCauchy;
    out.witness = witness;
  }
  return out;
}

EigenResidual eigen_residual(const FockState& a, const PadicTarget& lambda,
                             const RExponent& rho) {
  const Prime& p = lambda.prime();
  FockState r = apply_bracket_L0(a);
  FockState scaled = a;
  scaled *= lambda.working_value();
  r -= scaled;

  EigenResidual out;
  out.value = r_norm(r, p, rho);
  out.uncertainty = NormValue::zero();
  if (!lambda.is_rational()) {
    // the representative may be off by a multiple of p^m
    out.uncertainty = NormValue::from_exponent(Rational(*lambda.precision())) * r_norm(a, p, rho);
    if (!norm_less(out.uncertainty, out.value)) {
      out.certified = false;
      out.value = NormValue::max(out.value, out.uncertainty);
    }
  }
  return out;
}

}  // namespace pheis
