// pheis: exact p-adic Heisenberg VOA experiments at desk scale.
//
// JSON goes to stdout; machine-readable errors go to stderr.  Exit codes:
// 0 success/PASS, 1 verified FAIL, 2 usage error, 3 precision shortfall.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pheis/expr.hpp"
#include "pheis/onepoint.hpp"
#include "pheis/rng.hpp"
#include "pheis/serialize.hpp"
#include "pheis/weight_space.hpp"

namespace {

using namespace pheis;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecision = 3;

struct GlobalOpts {
  long prime = 5;
  std::uint64_t seed = 0;
  int degree_cap = 30;
  int qmax = 20;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void emit_series_csv(const QSeries& s) {
  std::cout << "n,coeff\n";
  for (int i = 0; i <= s.truncation(); ++i) {
    std::cout << i << "," << to_fraction_string(s.coeff(i)) << "\n";
  }
}

int emit_error(const std::string& message, int code) {
  Json err;
  err["schema"] = "pheis/error/1";
  err["error"] = message;
  err["code"] = code;
  std::cerr << err.dump() << "\n";
  return code;
}

std::vector<int> parse_digits(const std::string& text) {
  std::vector<int> digits;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty digit in --lambda");
    digits.push_back(std::stoi(item));
  }
  if (digits.empty()) throw std::invalid_argument("--lambda needs at least one digit");
  return digits;
}

Json fit_to_json(const QuasimodularFit& fit) {
  Json j;
  j["weight"] = fit.weight;
  switch (fit.status) {
    case QuasimodularFit::Status::Fit: j["status"] = "fit"; break;
    case QuasimodularFit::Status::NonMember: j["status"] = "nonmember"; break;
    case QuasimodularFit::Status::Underdetermined: j["status"] = "underdetermined"; break;
  }
  Json basis = Json::array();
  for (const auto& m : fit.basis) basis.push_back(m.label());
  j["basis"] = std::move(basis);
  Json coeffs = Json::array();
  for (const auto& c : fit.coeffs) coeffs.push_back(to_fraction_string(c));
  j["coeffs"] = std::move(coeffs);
  j["residual_zero"] = fit.status == QuasimodularFit::Status::Fit;
  return j;
}

// ---------------------------------------------------------------- zexp

int run_zexp(const GlobalOpts& g, const std::string& expr, int qmax,
             std::optional<int> fit_weight, bool csv) {
  FockState state = parse_state(expr, g.degree_cap);
  TraceEngine engine(qmax);
  if (csv) {
    emit_series_csv(z_series(engine, state));
    return kExitPass;
  }
  Json out;
  out["schema"] = "pheis/zexp/1";
  out["state"] = print_state(state);
  out["qmax"] = qmax;
  out["series"] = qseries_to_json(z_series(engine, state));
  if (fit_weight) {
    out["fit"] = fit_to_json(quasimodular_fit(qseries_from_json(out["series"]), *fit_weight, qmax));
  } else {
    out["fit"] = nullptr;
  }
  emit(out);
  return kExitPass;
}

// ---------------------------------------------------------------- eisenstein

int run_eisenstein(const GlobalOpts& g, long k, int qmax, bool star,
                   const std::string& chain_text, int precision, bool csv) {
  Json out;
  if (!star) {
    if (csv) {
      emit_series_csv(eisenstein(k, qmax));
      return kExitPass;
    }
    out["schema"] = "pheis/eisenstein/1";
    out["k"] = k;
    out["series"] = qseries_to_json(eisenstein(k, qmax));
    emit(out);
    return kExitPass;
  }
  Prime p(g.prime);
  std::vector<long> weights;
  std::stringstream ss(chain_text);
  std::string item;
  while (std::getline(ss, item, ',')) weights.push_back(std::stol(item));
  KummerChain chain(p, weights);

  out["schema"] = "pheis/eisenstein-star/1";
  out["p"] = p.value();
  out["chain"] = weights;
  out["precision"] = precision;
  Json coeffs = Json::array();
  bool short_chain = false;
  for (int n = 0; n <= qmax; ++n) {
    auto c = eisenstein_star_coeff(chain, n, precision);
    Json cj;
    cj["n"] = n;
    if (c.status == EisensteinStarCoeff::Status::Ok) {
      cj["value"] = to_fraction_string(c.value);
      cj["residue"] = rational_residue_mod(c.value, p, precision).get_str();
      cj["certified"] = true;
    } else {
      cj["certified"] = false;
      short_chain = true;
    }
    coeffs.push_back(std::move(cj));
  }
  out["coeffs"] = std::move(coeffs);
  out["verdict"] = short_chain ? "INSUFFICIENT_CHAIN" : "STABILIZED";
  emit(out);
  return short_chain ? kExitPrecision : kExitPass;
}

// ---------------------------------------------------------------- kummer

int run_kummer(const GlobalOpts& g, long start, int steps, int qmax) {
  Prime p(g.prime);
  // k_{i+1} = k_i + (p-1) p^{i+1}
  std::vector<long> weights{start};
  long step = p.value();
  for (int i = 0; i < steps; ++i) {
    weights.push_back(weights.back() + (p.value() - 1) * step);
    step *= p.value();
  }
  KummerChain chain(p, weights);

  Json out;
  out["schema"] = "pheis/kummer/1";
  out["p"] = p.value();
  out["chain"] = weights;
  out["qmax"] = qmax;
  Json gaps = Json::array();
  bool all_ok = true;
  for (int i = 0; i < chain.steps(); ++i) {
    KummerGap gap = kummer_gap(chain, i, qmax);
    bool ok = norm_leq(gap.measured, gap.predicted);
    all_ok = all_ok && ok;
    Json gj;
    gj["step"] = i;
    gj["measured"] = norm_to_json(gap.measured, p);
    gj["predicted"] = norm_to_json(gap.predicted, p);
    gj["within_prediction"] = ok;
    gaps.push_back(std::move(gj));
  }
  out["gaps"] = std::move(gaps);

  WeightLimit lim = weight_limit(weights, p);
  Json wj;
  wj["cauchy"] = lim.ok;
  if (lim.ok) {
    if (p.value() != 2) wj["residue"] = *lim.limit->residue();
    wj["body"] = lim.limit->body().get_str();
    wj["precision"] = lim.limit->precision() ? Json(*lim.limit->precision()) : Json("exact");
    wj["even"] = lim.limit->is_even();
  } else {
    wj["violating_index"] = lim.violating_index;
  }
  out["weight_limit"] = std::move(wj);
  out["verdict"] = (all_ok && lim.ok) ? "PASS" : "FAIL";
  emit(out);
  return (all_ok && lim.ok) ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- jacobi-check

int run_jacobi(const GlobalOpts& g, int degree, int window, int trials) {
  Prime p(g.prime);
  Rng rng(g.seed);
  Json out;
  out["schema"] = "pheis/jacobi-check/1";
  out["degree"] = degree;
  out["window"] = window;
  out["trials"] = trials;
  out["seed"] = g.seed;
  Json witnesses = Json::array();
  for (int i = 0; i < trials; ++i) {
    FockState a = rng.state(p, degree, 2);
    FockState b = rng.state(p, degree, 2);
    FockState c = rng.state(p, degree, 2);
    int r = rng.int_in(-window, window);
    int s = rng.int_in(-window, window);
    int t = rng.int_in(-window, window);
    FockState residual = jacobi_residual(a, b, c, r, s, t);
    if (!residual.is_zero()) {
      Json w;
      w["trial"] = i;
      w["a"] = print_state(a);
      w["b"] = print_state(b);
      w["c"] = print_state(c);
      w["r"] = r;
      w["s"] = s;
      w["t"] = t;
      w["residual"] = print_state(residual);
      witnesses.push_back(std::move(w));
    }
  }
  out["failures"] = witnesses.size();
  out["witnesses"] = std::move(witnesses);
  out["verdict"] = witnesses.empty() ? "PASS" : "FAIL";
  emit(out);
  return witnesses.empty() ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- axioms

int run_axioms(const GlobalOpts& g, const std::string& suite, int degree) {
  Prime p(g.prime);
  Rng rng(g.seed);
  long failures = 0;
  long checks = 0;

  if (suite == "ccr") {
    for (int d = 0; d <= degree; ++d) {
      for (const Partition& part : partition_basis(d)) {
        FockState b = FockState::monomial(part);
        for (int m = -6; m <= 6; ++m) {
          for (int n = -6; n <= 6; ++n) {
            FockState lhs = apply_h(m, apply_h(n, b)) - apply_h(n, apply_h(m, b));
            FockState rhs = (m + n == 0) ? Rational(m) * b : FockState::zero();
            ++checks;
            if (!(lhs == rhs)) ++failures;
          }
        }
      }
    }
  } else if (suite == "virasoro") {
    for (int d = 0; d <= degree; ++d) {
      for (const Partition& part : partition_basis(d)) {
        FockState b = FockState::monomial(part);
        for (int m = -4; m <= 4; ++m) {
          for (int n = -4; n <= 4; ++n) {
            FockState lhs = apply_L(m, apply_L(n, b)) - apply_L(n, apply_L(m, b));
            FockState rhs = Rational(m - n) * apply_L(m + n, b);
            if (m + n == 0) {
              Rational central(static_cast<long>(m) * m * m - m, 12);
              central.canonicalize();
              rhs += central * b;
            }
            ++checks;
            if (!(lhs == rhs)) ++failures;
          }
        }
      }
    }
  } else if (suite == "grading") {
    for (int i = 0; i < 200; ++i) {
      Partition pa = rng.partition(degree);
      Partition pb = rng.partition(degree);
      int t = rng.int_in(-4, degree);
      FockState r = mode_product(FockState::monomial(pa), t, FockState::monomial(pb));
      ++checks;
      if (r.is_zero()) continue;
      if (!r.is_homogeneous() ||
          *r.homogeneous_degree() != pa.weight() + pb.weight() - t - 1) {
        ++failures;
      }
    }
  } else if (suite == "normcompat") {
    RExponent sup = RExponent::sup_norm();
    for (int i = 0; i < 500; ++i) {
      FockState a = rng.state(p, degree, 2);
      FockState b = rng.state(p, degree, 2);
      int n = rng.int_in(-4, 8);
      FockState ab = mode_product(a, n, b);
      ++checks;
      if (!norm_leq(r_norm(ab, p, sup), r_norm(a, p, sup) * r_norm(b, p, sup))) ++failures;
    }
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }

  Json out;
  out["schema"] = "pheis/axioms/1";
  out["suite"] = suite;
  out["degree"] = degree;
  out["p"] = p.value();
  out["seed"] = g.seed;
  out["checks"] = checks;
  out["failures"] = failures;
  out["verdict"] = failures == 0 ? "PASS" : "FAIL";
  emit(out);
  return failures == 0 ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- resolvent

int run_resolvent(const GlobalOpts& g, const std::string& lambda_text, int mmax) {
  Prime p(g.prime);
  PadicTarget lam = PadicTarget::rational(p, rational_from_string(lambda_text));
  ResolventProfile prof = resolvent_norm_profile(lam, mmax);
  Json out;
  out["schema"] = "pheis/resolvent/1";
  out["p"] = p.value();
  out["lambda"] = lambda_text;
  out["mmax"] = mmax;
  Json entries = Json::array();
  for (const auto& e : prof.entries) entries.push_back(norm_to_json(e.value, p));
  out["profile"] = std::move(entries);
  out["max"] = norm_to_json(prof.max_value, p);
  emit(out);
  return kExitPass;
}

// ---------------------------------------------------------------- eigen-family

struct FamilyState {
  long weight = 0;
  FockState state;
};

int run_eigen_family(const GlobalOpts& g, const std::string& digits_text,
                     const std::string& rho_text, int steps, const std::string& out_path) {
  Prime p(g.prime);
  std::vector<int> digits = parse_digits(digits_text);
  PadicTarget lam = PadicTarget::from_digits(p, digits);
  Rational rho_q = rational_from_string(rho_text);
  RExponent rho(rho_q);

  if (static_cast<int>(digits.size()) < steps + 2) {
    return emit_error("need at least steps+2 digits of lambda to certify every step",
                      kExitPrecision);
  }

  Json states = Json::array();
  Integer modulus(p.value());
  for (int i = 0; i < steps; ++i) {
    // k_i: smallest positive integer congruent to lambda mod p^{i+1}
    Integer k = lam.representative() % modulus;
    if (k == 0) k = modulus;
    if (k > g.degree_cap) {
      return emit_error("family weight " + k.get_str() + " exceeds the degree cap",
                        kExitUsage);
    }
    long ki = static_cast<long>(k.get_si());
    FockState lift = bracket_lift(FockState::monomial(Partition({static_cast<int>(ki)})));
    // normalize |a|_rho into [1, p) by a p-power scaling
    NormValue norm = r_norm(lift, p, rho);
    Rational e = *norm.exponent();
    Integer t_ceil;
    mpz_cdiv_q(t_ceil.get_mpz_t(), e.get_num().get_mpz_t(), e.get_den().get_mpz_t());
    long t = -static_cast<long>(t_ceil.get_si());
    Rational scale(1);
    for (long j = 0; j < t; ++j) scale *= p.value();
    for (long j = 0; j < -t; ++j) scale /= p.value();
    lift *= scale;

    Json sj;
    sj["weight"] = ki;
    sj["state"] = state_to_json(lift);
    states.push_back(std::move(sj));
    modulus *= p.value();
  }

  Json out;
  out["schema"] = "pheis/family/1";
  out["p"] = p.value();
  out["rho"] = rho_text;
  out["lambda_digits"] = digits;
  out["states"] = std::move(states);

  if (out_path.empty()) {
    emit(out);
  } else {
    std::ofstream f(out_path);
    if (!f) return emit_error("cannot write " + out_path, kExitUsage);
    f << out.dump(2) << "\n";
  }
  return kExitPass;
}

// ---------------------------------------------------------------- eigen-verify

int run_eigen_verify(const GlobalOpts& g, const std::string& digits_text,
                     const std::string& rho_text, const std::string& family_path) {
  Prime p(g.prime);
  PadicTarget lam = PadicTarget::from_digits(p, parse_digits(digits_text));
  Rational rho_q = rational_from_string(rho_text);

  Rational lo(1, p.value());
  Rational hi(1, p.value() - 1);
  const bool spectral_grade = lo < rho_q && rho_q < hi;
  RExponent rho = spectral_grade ? RExponent::spectral(rho_q, p) : RExponent(rho_q);

  std::ifstream f(family_path);
  if (!f) return emit_error("cannot read " + family_path, kExitUsage);
  Json family = Json::parse(f);

  Json out;
  out["schema"] = "pheis/eigen-verify/1";
  out["p"] = p.value();
  out["rho"] = rho_text;
  out["spectral_grade"] = spectral_grade;
  out["lambda_digits"] = family.contains("lambda_digits") ? family["lambda_digits"] : Json(nullptr);

  Json rows = Json::array();
  std::vector<NormValue> residuals;
  bool precision_short = false;
  for (const auto& sj : family.at("states")) {
    FockState state = state_from_json(sj.at("state"));
    EigenResidual res = eigen_residual(state, lam, rho);
    Json row;
    if (sj.contains("weight")) {
      long w = sj["weight"].get<long>();
      row["weight"] = w;
      Integer mod;
      mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p.value()),
                    static_cast<unsigned long>(*lam.precision()));
      Integer diff = (Integer(w) - lam.representative()) % mod;
      if (diff < 0) diff += mod;
      row["weight_distance"] =
          diff == 0 ? Json("<= p^-" + std::to_string(*lam.precision()))
                    : Json(norm_to_json(
                          NormValue::from_exponent(Rational(*padic_valuation(diff, p))), p));
    }
    row["residual"] = norm_to_json(res.value, p);
    row["certified"] = res.certified;
    if (!res.certified) precision_short = true;
    residuals.push_back(res.value);
    rows.push_back(std::move(row));
  }
  out["residuals"] = std::move(rows);

  bool decreasing = true;
  for (std::size_t i = 0; i + 1 < residuals.size(); ++i) {
    if (!norm_less(residuals[i + 1], residuals[i])) decreasing = false;
  }
  out["residuals_strictly_decreasing"] = decreasing;
  out["verdict"] = precision_short ? "PRECISION_SHORT" : (decreasing ? "PASS" : "FAIL");
  emit(out);
  if (precision_short) return kExitPrecision;
  return decreasing ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- eisenstein-search

int run_eisenstein_search(const GlobalOpts& g, long k, int degree, int qmax) {
  Prime p(g.prime);
  TraceEngine engine(qmax);
  const QSeries ek = eisenstein(k, qmax);

  Json out;
  out["schema"] = "pheis/eisenstein-search/1";
  out["p"] = p.value();
  out["k"] = k;
  out["degree"] = degree;
  out["qmax"] = qmax;
  Json matches = Json::array();
  for (int a = 1; a <= degree; ++a) {
    for (int b = a; a + b <= degree; ++b) {
      FockState state = apply_h_bracket(-a, apply_h_bracket(-b, FockState::vacuum()));
      QSeries z = z_series(engine, state);
      Rational scale = z.coeff(0);
      if (scale == 0) continue;
      QSeries expect = ek;
      expect *= scale;
      if (!(z == expect)) continue;
      Json m;
      m["state"] = "h[-" + std::to_string(a) + "] h[-" + std::to_string(b) + "] vac";
      m["bracket_weight"] = a + b;
      m["scale"] = to_fraction_string(scale);
      matches.push_back(std::move(m));
    }
  }
  out["matches"] = std::move(matches);
  emit(out);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact p-adic Heisenberg VOA experiments"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts g;
  app.add_option("--prime,--p", g.prime, "ambient prime p")->capture_default_str();
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
  app.add_option("--degree-cap", g.degree_cap, "max state degree")->capture_default_str();
  app.add_option("--qmax", g.qmax, "default q-expansion window")->capture_default_str();
  app.set_config("--config", "", "read defaults from a TOML/INI file");

  // zexp
  auto* zexp = app.add_subcommand("zexp", "normalized one-point function of a state");
  std::string zexp_state;
  int zexp_qmax = -1;
  int zexp_fit = -1;
  bool zexp_csv = false;
  zexp->add_option("--state", zexp_state, "state expression")->required();
  zexp->add_option("--qmax", zexp_qmax, "q window (defaults to global)");
  zexp->add_option("--fit", zexp_fit, "fit against the weight-W quasimodular space");
  zexp->add_flag("--csv", zexp_csv, "emit the series as CSV instead of JSON");

  // eisenstein
  auto* eis = app.add_subcommand("eisenstein", "Eisenstein q-expansions and p-adic limits");
  long eis_k = 4;
  int eis_qmax = -1;
  bool eis_star = false;
  std::string eis_chain;
  int eis_precision = 2;
  eis->add_option("--k", eis_k, "weight")->required();
  eis->add_option("--qmax", eis_qmax, "q window (defaults to global)");
  eis->add_flag("--star", eis_star, "compute E_k* from a chain");
  eis->add_option("--chain", eis_chain, "comma-separated weight chain");
  eis->add_option("--precision", eis_precision, "target p-adic precision m")->capture_default_str();
  bool eis_csv = false;
  eis->add_flag("--csv", eis_csv, "emit the series as CSV instead of JSON");

  // kummer
  auto* kum = app.add_subcommand("kummer", "build a weight chain and measure Kummer gaps");
  long kum_start = 6;
  int kum_steps = 3;
  int kum_qmax = -1;
  kum->add_option("--start", kum_start, "first weight")->required();
  kum->add_option("--steps", kum_steps, "number of chain steps")->required();
  kum->add_option("--qmax", kum_qmax, "q window (defaults to global)");

  // jacobi-check
  auto* jac = app.add_subcommand("jacobi-check", "random exact Jacobi identity trials");
  int jac_degree = 6, jac_window = 3, jac_trials = 200;
  jac->add_option("--degree", jac_degree, "max state degree")->capture_default_str();
  jac->add_option("--window", jac_window, "index window for r,s,t")->capture_default_str();
  jac->add_option("--trials", jac_trials, "number of random triples")->capture_default_str();

  // axioms
  auto* ax = app.add_subcommand("axioms", "exact axiom suites");
  std::string ax_suite;
  int ax_degree = 8;
  ax->add_option("--suite", ax_suite, "ccr | virasoro | grading | normcompat")->required();
  ax->add_option("--degree", ax_degree, "max state degree")->capture_default_str();

  // resolvent
  auto* res = app.add_subcommand("resolvent", "norm profile of (L(0)-lambda)^{-1}");
  std::string res_lambda;
  int res_mmax = 50;
  res->add_option("--lambda", res_lambda, "rational lambda outside Z_{>=0}")->required();
  res->add_option("--mmax", res_mmax, "profile window")->capture_default_str();

  // eigen-family
  auto* fam = app.add_subcommand("eigen-family",
                                 "construct normalized L[0]-eigenstates with weights -> lambda");
  std::string fam_lambda, fam_rho, fam_out;
  int fam_steps = 4;
  fam->add_option("--lambda", fam_lambda, "base-p digits, least significant first")->required();
  fam->add_option("--rho", fam_rho, "R-exponent rho = log_p R as a rational")->required();
  fam->add_option("--steps", fam_steps, "family length")->capture_default_str();
  fam->add_option("--out", fam_out, "output file (stdout when absent)");

  // eigen-verify
  auto* ver = app.add_subcommand("eigen-verify", "measure eigen residuals of a family");
  std::string ver_lambda, ver_rho, ver_family;
  ver->add_option("--lambda", ver_lambda, "base-p digits, least significant first")->required();
  ver->add_option("--rho", ver_rho, "R-exponent rho as a rational")->required();
  ver->add_option("--family", ver_family, "family JSON file")->required();

  // eisenstein-search
  auto* srch = app.add_subcommand("eisenstein-search",
                                  "two-mode bracket states whose Z-image is a multiple of E_k");
  long srch_k = 4;
  int srch_degree = 8, srch_qmax = -1;
  srch->add_option("--k", srch_k, "Eisenstein weight")->required();
  srch->add_option("--degree", srch_degree, "max bracket weight a+b")->capture_default_str();
  srch->add_option("--qmax", srch_qmax, "q window (defaults to global)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(e.what(), kExitUsage);
  }

  try {
    if (*zexp) {
      return run_zexp(g, zexp_state, zexp_qmax < 0 ? g.qmax : zexp_qmax,
                      zexp_fit < 0 ? std::nullopt : std::optional<int>(zexp_fit), zexp_csv);
    }
    if (*eis) {
      if (eis_star && eis_chain.empty()) {
        return emit_error("--star requires --chain", kExitUsage);
      }
      return run_eisenstein(g, eis_k, eis_qmax < 0 ? g.qmax : eis_qmax, eis_star, eis_chain,
                            eis_precision, eis_csv);
    }
    if (*kum) return run_kummer(g, kum_start, kum_steps, kum_qmax < 0 ? g.qmax : kum_qmax);
    if (*jac) return run_jacobi(g, jac_degree, jac_window, jac_trials);
    if (*ax) return run_axioms(g, ax_suite, ax_degree);
    if (*res) return run_resolvent(g, res_lambda, res_mmax);
    if (*fam) return run_eigen_family(g, fam_lambda, fam_rho, fam_steps, fam_out);
    if (*ver) return run_eigen_verify(g, ver_lambda, ver_rho, ver_family);
    if (*srch) return run_eisenstein_search(g, srch_k, srch_degree,
                                            srch_qmax < 0 ? g.qmax : srch_qmax);
  } catch (const ParseError& e) {
    return emit_error(e.what(), kExitUsage);
  } catch (const std::invalid_argument& e) {
    return emit_error(e.what(), kExitUsage);
  } catch (const std::exception& e) {
    return emit_error(e.what(), kExitUsage);
  }
  return emit_error("no subcommand", kExitUsage);
}
