#include "pheis/serialize.hpp"

namespace pheis {

Json rational_to_json(const Rational& x) { return to_fraction_string(x); }

Rational rational_from_json(const Json& j) {
  return rational_from_string(j.get<std::string>());
}

Json norm_to_json(const NormValue& n, const Prime& p) {
  Json j;
  j["base"] = p.value();
  j["neg_exponent"] = n.is_zero() ? Json("inf") : Json(to_fraction_string(*n.exponent()));
  return j;
}

Json state_to_json(const FockState& s) {
  Json j = Json::array();
  for (const auto& [part, c] : s.terms()) {
    Json term;
    term["partition"] = part.parts();
    term["coeff"] = to_fraction_string(c);
    j.push_back(std::move(term));
  }
  return j;
}

FockState state_from_json(const Json& j) {
  FockState s;
  for (const auto& term : j) {
    Partition p(term.at("partition").get<std::vector<int>>());
    s.add_term(p, rational_from_string(term.at("coeff").get<std::string>()));
  }
  return s;
}

Json qseries_to_json(const QSeries& s) {
  Json j;
  j["truncation"] = s.truncation();
  Json coeffs = Json::array();
  for (const Rational& c : s.coeffs()) coeffs.push_back(to_fraction_string(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

QSeries qseries_from_json(const Json& j) {
  int trunc = j.at("truncation").get<int>();
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_string(c.get<std::string>()));
  return QSeries(trunc, std::move(coeffs));
}

Json matrix_to_json(const RationalMatrix& m) {
  Json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  Json entries = Json::array();
  for (const Rational& c : m.entries) entries.push_back(to_fraction_string(c));
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace pheis
