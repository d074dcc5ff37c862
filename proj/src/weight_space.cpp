#include "pheis/weight_space.hpp"

#include <stdexcept>

namespace pheis {

namespace {

Integer pow_int(long base, int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

long mod_positive(long k, long m) {
  long r = k % m;
  return r < 0 ? r + m : r;
}

}  // namespace

WeightX::WeightX(const Prime& p, std::optional<long> residue, Integer body,
                 std::optional<int> precision)
    : p_(p), residue_(residue), body_(std::move(body)), precision_(precision) {
  if (p_.value() == 2) {
    if (residue_ ) throw std::invalid_argument("p = 2 weights carry no residue component");
  } else if (!residue_) {
    throw std::invalid_argument("odd-p weights need a residue mod p-1");
  }
  if (precision_) {
    if (*precision_ < 1) throw std::invalid_argument("weight precision must be >= 1");
    body_ = body_ % pow_int(p_.value(), *precision_);
    if (body_ < 0) body_ += pow_int(p_.value(), *precision_);
  }
}

WeightX WeightX::from_integer(long k, const Prime& p) {
  std::optional<long> residue;
  if (p.value() != 2) residue = mod_positive(k, p.value() - 1);
  return WeightX(p, residue, Integer(k), std::nullopt);
}

WeightX WeightX::approximate(const Prime& p, std::optional<long> residue,
                             Integer body, int precision) {
  return WeightX(p, residue, std::move(body), precision);
}

bool WeightX::is_even() const {
  if (p_.value() != 2) return *residue_ % 2 == 0;
  // 2X = 2 Z_2: the body must be even, visible in its first digit.
  return mpz_even_p(body_.get_mpz_t()) != 0;
}

std::vector<int> WeightX::digits(int m) const {
  if (m < 0) throw std::invalid_argument("digit count must be >= 0");
  if (precision_ && m > *precision_) {
    throw std::invalid_argument("requested digits exceed known precision");
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m));
  Integer x = body_;
  Integer p(p_.value());
  if (x < 0) x += pow_int(p_.value(), m);  // exact negative bodies
  for (int i = 0; i < m; ++i) {
    Integer d = x % p;
    if (d < 0) d += p;
    out.push_back(static_cast<int>(d.get_si()));
    x = (x - d) / p;
  }
  return out;
}

WeightDistance weight_distance(const WeightX& a, const WeightX& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("weight distance across different primes");
  const Prime& p = a.prime();
  if (p.value() != 2 && *a.residue() != *b.residue()) {
    return {NormValue::one(), true};
  }
  std::optional<int> shared;
  if (a.precision()) shared = *a.precision();
  if (b.precision()) shared = shared ? std::min(*shared, *b.precision()) : *b.precision();

  Integer diff = a.body() - b.body();
  if (shared) {
    Integer mod = [&] {
      Integer r;
      mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p.value()),
                    static_cast<unsigned long>(*shared));
      return r;
    }();
    diff %= mod;
    if (diff == 0) {
      // Indistinguishable at this precision: only an upper bound.
      return {NormValue::from_exponent(Rational(*shared)), false};
    }
  }
  auto v = padic_valuation(diff, p);
  if (!v) return {NormValue::zero(), true};
  return {NormValue::from_exponent(Rational(*v)), true};
}

WeightLimit weight_limit(const std::vector<long>& ks, const Prime& p) {
  if (ks.empty()) throw std::invalid_argument("weight_limit needs a nonempty sequence");
  WeightLimit out;
  const bool odd = p.value() != 2;
  std::optional<long> residue;
  if (odd) residue = ((ks.front() % (p.value() - 1)) + (p.value() - 1)) % (p.value() - 1);

  std::optional<long> final_gap_exponent;  // of the last gap; nullopt when it vanishes
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
    WeightDistance d = weight_distance(WeightX::from_integer(ks[i], p),
                                       WeightX::from_integer(ks[i + 1], p));
    // pace: d(k_i, k_{i+1}) <= p^{-(i+1)}
    if (!d.bound.is_zero() && *d.bound.exponent() < Rational(static_cast<long>(i) + 1)) {
      out.ok = false;
      out.violating_index = static_cast<int>(i);
      return out;
    }
    if (d.bound.is_zero()) {
      final_gap_exponent = std::nullopt;
    } else {
      // integer-weight distances have integral exponents
      final_gap_exponent = static_cast<long>(d.bound.exponent()->get_num().get_si());
    }
  }

  out.ok = true;
  if (!final_gap_exponent) {
    // single element or a constant tail: the data pins the limit exactly
    out.limit = WeightX::from_integer(ks.back(), p);
  } else {
    out.limit = WeightX::approximate(p, residue, Integer(ks.back()),
                                     static_cast<int>(*final_gap_exponent));
  }
  return out;
}

}  // namespace pheis
