#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pheis/rational.hpp"
#include "pheis/rng.hpp"
#include "pheis/weight_space.hpp"

using namespace pheis;

TEST_CASE("prime validation") {
  CHECK_NOTHROW(Prime(2));
  CHECK_NOTHROW(Prime(5));
  CHECK_NOTHROW(Prime(97));
  CHECK_THROWS_AS(Prime(1), std::invalid_argument);
  CHECK_THROWS_AS(Prime(4), std::invalid_argument);
  CHECK_THROWS_AS(Prime(91), std::invalid_argument);  // 7*13
}

TEST_CASE("p-adic valuation") {
  Prime two(2), five(5);
  CHECK(*padic_valuation(Rational(12), two) == 2);
  CHECK(*padic_valuation(Rational(5, 3), five) == 1);
  CHECK(!padic_valuation(Rational(0), five).has_value());
  CHECK(*padic_valuation(Rational(1, 4), two) == -2);
  CHECK(*padic_valuation(Rational(-50), five) == 2);
}

TEST_CASE("p-adic norm examples") {
  Prime two(2), five(5);
  CHECK(padic_norm(Rational(12), two) == NormValue::from_exponent(Rational(2)));
  CHECK(padic_norm(Rational(1), five) == NormValue::one());
  CHECK(padic_norm(Rational(1, 5), five) == NormValue::from_exponent(Rational(-1)));
  CHECK(padic_norm(Rational(0), two).is_zero());
}

TEST_CASE("norm ordering and multiplicativity") {
  NormValue big = NormValue::from_exponent(Rational(-2));   // p^2
  NormValue one = NormValue::one();
  NormValue small = NormValue::from_exponent(Rational(3));  // p^-3
  CHECK(norm_less(small, one));
  CHECK(norm_less(one, big));
  CHECK(norm_less(NormValue::zero(), small));
  CHECK((big * small) == NormValue::from_exponent(Rational(1)));
  CHECK((big * NormValue::zero()).is_zero());
}

TEST_CASE("ultrametric inequality on random rationals") {
  Prime p(5);
  Rng rng(20240811);
  for (int i = 0; i < 10000; ++i) {
    Rational x = rng.rational(p);
    Rational y = rng.rational(p);
    auto vx = padic_valuation(x, p);
    auto vy = padic_valuation(y, p);
    auto vs = padic_valuation(x + y, p);
    long lo = std::min(*vx, *vy);
    if (vs) CHECK(*vs >= lo);
    if (*vx != *vy) {
      REQUIRE(vs.has_value());
      CHECK(*vs == lo);  // equality when exponents differ
    }
    // multiplicativity
    CHECK(*padic_valuation(x * y, p) == *vx + *vy);
  }
}

TEST_CASE("series convergence criterion on geometric series") {
  // sum p^n converges to 1/(1-p); partial sums stabilize mod p^k
  Prime p(5);
  Rational target(-1, 4);  // 1/(1-p)
  Rational partial(0);
  Rational power(1);
  for (int n = 0; n < 12; ++n) {
    partial += power;
    power *= 5;
    auto v = padic_valuation(partial - target, p);
    REQUIRE(v.has_value());
    CHECK(*v == n + 1);  // tail norm shrinks exactly like the next term
  }
}

TEST_CASE("rational string round trip") {
  CHECK(to_fraction_string(Rational(-1, 12)) == "-1/12");
  CHECK(to_fraction_string(Rational(4)) == "4/1");
  CHECK(rational_from_string("-1/12") == Rational(-1, 12));
  CHECK(rational_from_string("7") == Rational(7));
  CHECK(rational_from_string("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
}

TEST_CASE("residues of p-integral rationals") {
  Prime five(5);
  CHECK(rational_residue_mod(Rational(-504), five, 2) == 21);
  CHECK(rational_residue_mod(Rational(1, 3), five, 2) == 17);  // 3*17 = 51 = 1 mod 25
  CHECK_THROWS_AS(rational_residue_mod(Rational(1, 5), five, 2), std::domain_error);
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 7) == 0);
  CHECK(binomial_general(-1, 3) == -1);
  CHECK(binomial_general(-2, 2) == 3);
  CHECK(binomial_general(-3, 1) == -3);
  CHECK(binomial_general(4, 2) == 6);
}

TEST_CASE("weight distance examples") {
  Prime five(5), two(2);
  auto d1 = weight_distance(WeightX::from_integer(4, five), WeightX::from_integer(104, five));
  CHECK(d1.exact);
  CHECK(d1.bound == NormValue::from_exponent(Rational(2)));  // 5^-2

  auto d2 = weight_distance(WeightX::from_integer(4, five), WeightX::from_integer(5, five));
  CHECK(d2.bound == NormValue::one());  // residues 0 vs 1 mod 4

  auto d3 = weight_distance(WeightX::from_integer(6, two), WeightX::from_integer(6, two));
  CHECK(d3.bound.is_zero());

  CHECK_THROWS_AS(weight_distance(WeightX::from_integer(4, five), WeightX::from_integer(4, two)),
                  std::invalid_argument);
}

TEST_CASE("weight distance limited by precision") {
  Prime five(5);
  WeightX a = WeightX::approximate(five, 2, Integer(6), 2);
  WeightX b = WeightX::approximate(five, 2, Integer(31), 2);  // = 6 mod 25
  auto d = weight_distance(a, b);
  CHECK_FALSE(d.exact);
  CHECK(d.bound == NormValue::from_exponent(Rational(2)));  // only an upper bound
}

TEST_CASE("weight limit verifies the Cauchy pace") {
  Prime five(5), two(2);

  auto ok = weight_limit({6, 26, 126, 626}, five);
  REQUIRE(ok.ok);
  REQUIRE(ok.limit.has_value());
  CHECK(*ok.limit->residue() == 2);
  CHECK(ok.limit->is_even());
  REQUIRE(ok.limit->precision().has_value());
  CHECK(*ok.limit->precision() == 3);
  // body congruent to the last element mod 5^3
  CHECK((ok.limit->body() - 626) % 125 == 0);

  auto bad = weight_limit({6, 7}, five);
  CHECK_FALSE(bad.ok);
  CHECK(bad.violating_index == 0);

  auto constant = weight_limit({4, 4, 4}, two);
  REQUIRE(constant.ok);
  CHECK(constant.limit->is_exact());
  CHECK(constant.limit->body() == 4);
  CHECK(constant.limit->is_even());
}

TEST_CASE("weight digits") {
  Prime five(5);
  WeightX w = WeightX::from_integer(626, five);
  auto d = w.digits(5);
  // 626 = 1 + 0*5 + 0*25 + 0*125 + 1*625
  CHECK(d == std::vector<int>{1, 0, 0, 0, 1});
  WeightX neg = WeightX::from_integer(-1, five);
  CHECK(neg.digits(3) == std::vector<int>{4, 4, 4});
}
