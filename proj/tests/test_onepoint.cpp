#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pheis/onepoint.hpp"
#include "pheis/rng.hpp"

using namespace pheis;

TEST_CASE("eta series") {
  QSeries inv = eta_inverse(10);
  CHECK(inv.coeff(0) == 1);
  CHECK(inv.coeff(4) == 5);
  CHECK(inv.coeff(6) == 11);
  CHECK(inv.coeff(10) == 42);

  // eta * eta^{-1} = 1
  QSeries prod = eta_q(30) * eta_inverse(30);
  CHECK(prod == QSeries::one(30));

  // pentagonal sparsity of eta
  QSeries eta = eta_q(15);
  CHECK(eta.coeff(1) == -1);
  CHECK(eta.coeff(2) == -1);
  CHECK(eta.coeff(3) == 0);
  CHECK(eta.coeff(5) == 1);
  CHECK(eta.coeff(7) == 1);
  CHECK(eta.coeff(12) == -1);
  CHECK(eta.coeff(15) == -1);
}

TEST_CASE("Z(1) = 1 exactly") {
  QSeries z = z_series(FockState::vacuum(), 30);
  CHECK(z == QSeries::one(30));
}

TEST_CASE("trace engine matches the zero-mode matrix route") {
  TraceEngine engine(8);
  for (int da = 0; da <= 4; ++da) {
    for (const Partition& mono : partition_basis(da)) {
      FockState a = FockState::monomial(mono);
      for (int d = 0; d <= 8; ++d) {
        RationalMatrix m = zero_mode_matrix(a, d);
        Rational tr(0);
        for (int i = 0; i < m.rows; ++i) tr += m.at(i, i);
        CHECK(engine.slice_trace(mono, d) == tr);
      }
    }
  }
}

TEST_CASE("Z of h(-1)^2 1 is (1 - E2)/12") {
  const int D = 20;
  QSeries z = z_series(FockState::monomial(Partition({1, 1})), D);
  QSeries expect = QSeries::one(D) - eisenstein(2, D);
  expect *= Rational(1, 12);
  CHECK(z == expect);
}

TEST_CASE("Z of the lifted quadratic state is -E2/12") {
  const int D = 20;
  FockState lifted = bracket_lift(FockState::monomial(Partition({1, 1})));
  QSeries z = z_series(lifted, D);
  QSeries expect = eisenstein(2, D);
  expect *= Rational(-1, 12);
  CHECK(z == expect);

  auto fit = quasimodular_fit(z, 2, D);
  REQUIRE(fit.status == QuasimodularFit::Status::Fit);
  REQUIRE(fit.basis.size() == 1);
  CHECK(fit.basis[0].label() == "E2");
  CHECK(fit.coeffs[0] == Rational(-1, 12));
}

TEST_CASE("graded check on low-degree basis vectors") {
  const int D = 14;
  TraceEngine engine(D);

  TraceReport vac = graded_check(engine, FockState::vacuum());
  REQUIRE(vac.fit.has_value());
  CHECK(vac.fit->status == QuasimodularFit::Status::Fit);
  CHECK(vac.fit->coeffs == std::vector<Rational>{Rational(1)});

  // odd degree: Z vanishes identically
  TraceReport odd = graded_check(engine, FockState::monomial(Partition({1})));
  CHECK(odd.series.is_zero());
  CHECK(odd.fit->status == QuasimodularFit::Status::Fit);

  for (int d = 0; d <= 5; ++d) {
    for (const Partition& v : partition_basis(d)) {
      TraceReport rep = graded_check(engine, FockState::monomial(v));
      REQUIRE(rep.fit.has_value());
      CHECK(rep.fit->status == QuasimodularFit::Status::Fit);
    }
  }
}

TEST_CASE("Z is linear") {
  const int D = 12;
  TraceEngine engine(D);
  Rng rng(41);
  Prime p(5);
  for (int i = 0; i < 10; ++i) {
    FockState a = rng.state(p, 5);
    FockState b = rng.state(p, 5);
    Rational alpha = rng.rational(p);
    Rational beta = rng.rational(p);
    QSeries lhs = z_series(engine, alpha * a + beta * b);
    QSeries rhs = alpha * z_series(engine, a) + beta * z_series(engine, b);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("trace window stability") {
  FockState a = bracket_lift(FockState::monomial(Partition({2, 2})));
  QSeries z20 = z_series(a, 20);
  QSeries z10 = z_series(a, 10);
  CHECK(z20.truncated(10) == z10);
}

TEST_CASE("z_limit on a constant sequence") {
  Prime p(5);
  FockState a = bracket_lift(FockState::monomial(Partition({2})));
  ZLimit lim = z_limit({a, a, a}, 10, p);
  REQUIRE(lim.status == ZLimit::Status::Ok);
  CHECK(lim.tail_bound.is_zero());
  CHECK(lim.values == z_series(a, 10));
}

TEST_CASE("z_limit propagates cauchy bounds to the series") {
  Prime p(5);
  // a_i = sum_{d<=i} p^d h(-d) 1: gaps p^{-i} in sup-norm
  std::vector<FockState> seq;
  FockState acc = FockState::vacuum();
  Rational power(1);
  for (int i = 1; i <= 5; ++i) {
    power *= 5;
    acc.add_term(Partition({i}), power);
    seq.push_back(acc);
  }
  ZLimit lim = z_limit(seq, 10, p);
  REQUIRE(lim.status == ZLimit::Status::Ok);
  REQUIRE(lim.state_gaps.size() == 4);
  CHECK(lim.state_gaps[0] == NormValue::from_exponent(Rational(2)));
  CHECK(lim.tail_bound == NormValue::from_exponent(Rational(5)));
  // |Z(a) - Z(b)| <= |a - b| (continuity at operator bound 1)
  for (std::size_t i = 0; i < lim.series_gaps.size(); ++i) {
    CHECK(norm_leq(lim.series_gaps[i], lim.state_gaps[i]));
  }
}

TEST_CASE("two-mode bracket states interpolate Eisenstein series") {
  // For each chain weight k, a scaled h[-1]h[-(k-1)]1 has Z-image exactly
  // E_k; the Z-series then stabilize coefficientwise to the p-adic limit
  // measured by eisenstein_star_coeff.  (The states themselves are not
  // sup-norm Cauchy, so this matching lives on the series side.)
  const int D = 8;
  Prime five(5);
  TraceEngine engine(D);
  KummerChain chain(five, {6, 26});

  std::vector<QSeries> zs;
  for (long k : chain.weights()) {
    FockState s = apply_h_bracket(-1, apply_h_bracket(-(static_cast<int>(k) - 1),
                                                      FockState::vacuum()));
    QSeries z = z_series(engine, s);
    Rational scale = z.coeff(0);
    REQUIRE(scale != 0);
    z *= 1 / scale;
    CHECK(z == eisenstein(k, D));  // exact E_k multiple, rescaled
    zs.push_back(std::move(z));
  }
  // series gap matches the Kummer gap: within 5^-2
  QSeries diff = zs[1] - zs[0];
  CHECK(norm_leq(sup_norm(diff, five).value, NormValue::from_exponent(Rational(2))));
  // stabilized coefficients agree with the interpolated series mod 5^2
  for (int n = 1; n <= D; ++n) {
    auto star = eisenstein_star_coeff(chain, n, 2);
    REQUIRE(star.status == EisensteinStarCoeff::Status::Ok);
    CHECK(rational_residue_mod(zs[1].coeff(n), five, 2) ==
          rational_residue_mod(star.value, five, 2));
  }
}

TEST_CASE("z_limit rejects non-cauchy input") {
  Prime p(5);
  FockState a = FockState::vacuum();
  FockState b = FockState::monomial(Partition({1}));
  // gaps of norm 1 at every step can never fit a positive rate
  ZLimit lim = z_limit({a, b, a, b}, 8, p);
  CHECK(lim.status == ZLimit::Status::NotCauchy);
}
