#include "pheis/fock.hpp"

#include <stdexcept>

namespace pheis {

RExponent::RExponent(Rational rho) : rho_(std::move(rho)) {
  if (rho_ < 0) throw std::invalid_argument("R-exponent must satisfy rho >= 0");
}

RExponent RExponent::spectral(Rational rho, const Prime& p) {
  Rational lo(1, p.value());
  Rational hi(1, p.value() - 1);
  if (!(lo < rho && rho < hi)) {
    throw std::invalid_argument("spectral-grade exponent needs 1/p < rho < 1/(p-1)");
  }
  return RExponent(std::move(rho), true);
}

FockState FockState::monomial(const Partition& p, const Rational& c) {
  FockState s;
  s.add_term(p, c);
  return s;
}

std::optional<int> FockState::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.weight();
}

int FockState::degree_or(int fallback) const {
  auto d = degree();
  return d ? *d : fallback;
}

Rational FockState::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FockState::add_term(const Partition& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool FockState::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.weight();
  return terms_.rbegin()->first.weight() == d;
}

std::optional<int> FockState::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.weight();
}

FockState FockState::component(int d) const {
  FockState out;
  for (const auto& [p, c] : terms_) {
    if (p.weight() == d) out.add_term(p, c);
  }
  return out;
}

std::map<int, FockState> FockState::components() const {
  std::map<int, FockState> out;
  for (const auto& [p, c] : terms_) out[p.weight()].add_term(p, c);
  return out;
}

FockState& FockState::operator+=(const FockState& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

FockState& FockState::operator-=(const FockState& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

FockState& FockState::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

std::string FockState::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Rational a = c;
    if (first) {
      first = false;
    } else if (a < 0) {
      s += " - ";
      a = -a;
    } else {
      s += " + ";
    }
    if (a != 1) s += to_fraction_string(a) + " * ";
    s += p.to_string();
  }
  return s;
}

NormValue r_norm(const FockState& a, const Prime& p, const RExponent& rho) {
  NormValue best = NormValue::zero();
  for (const auto& [part, c] : a.terms()) {
    auto v = padic_valuation(c, p);
    NormValue term = NormValue::from_exponent(Rational(*v) - Rational(part.weight()) * rho.rho());
    best = NormValue::max(best, term);
  }
  return best;
}

TruncatedState truncate(const FockState& a, int degree_cap, const Prime& p,
                        const RExponent& rho) {
  if (degree_cap < 0) throw std::invalid_argument("truncate: degree cap must be >= 0");
  TruncatedState out;
  out.degree_cap = degree_cap;
  FockState tail;
  for (const auto& [part, c] : a.terms()) {
    if (part.weight() <= degree_cap) {
      out.body.add_term(part, c);
    } else {
      tail.add_term(part, c);
    }
  }
  out.tail_bound = r_norm(tail, p, rho);
  return out;
}

}  // namespace pheis
