#include "pheis/rational.hpp"

namespace pheis {

Prime::Prime(long p) : p_(p) {
  if (p < 2) throw std::invalid_argument("prime must be >= 2");
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("not a prime: " + std::to_string(p));
  }
}

std::optional<long> padic_valuation(const Integer& x, const Prime& p) {
  if (x == 0) return std::nullopt;
  Integer tmp;
  Integer base(p.value());
  return static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_mpz_t(), base.get_mpz_t()));
}

std::optional<long> padic_valuation(const Rational& x, const Prime& p) {
  if (x == 0) return std::nullopt;
  auto vn = padic_valuation(Integer(x.get_num()), p);
  auto vd = padic_valuation(Integer(x.get_den()), p);
  return *vn - *vd;
}

NormValue padic_norm(const Rational& x, const Prime& p) {
  auto v = padic_valuation(x, p);
  if (!v) return NormValue::zero();
  return NormValue::from_exponent(Rational(*v));
}

std::string NormValue::to_string(const Prime& p) const {
  if (is_zero()) return "0";
  return std::to_string(p.value()) + "^(-" + exp_->get_str() + ")";
}

std::string to_fraction_string(const Rational& x) {
  return Integer(x.get_num()).get_str() + "/" + Integer(x.get_den()).get_str();
}

Rational rational_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string str(s);
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), str.c_str(), 10) != 0) {
    throw std::invalid_argument("malformed rational: " + str);
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + str);
  r.canonicalize();
  return r;
}

Integer rational_residue_mod(const Rational& x, const Prime& p, int m) {
  if (m < 1) throw std::invalid_argument("rational_residue_mod: m must be >= 1");
  Integer mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p.value()),
                static_cast<unsigned long>(m));
  Integer den(x.get_den());
  if (mpz_divisible_p(den.get_mpz_t(), Integer(p.value()).get_mpz_t())) {
    throw std::domain_error("rational_residue_mod: x is not p-integral");
  }
  Integer den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw std::domain_error("rational_residue_mod: denominator not invertible");
  }
  Integer r = (Integer(x.get_num()) % mod) * den_inv % mod;
  if (r < 0) r += mod;
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer binomial_general(long r, long k) {
  if (k < 0) return Integer(0);
  // C(r,k) = r(r-1)...(r-k+1)/k!; for r < 0 equals (-1)^k C(k-r-1, k).
  if (r >= 0) return binomial(r, k);
  Integer v = binomial(k - r - 1, k);
  return (k % 2 == 0) ? v : Integer(-v);
}

}  // namespace pheis
