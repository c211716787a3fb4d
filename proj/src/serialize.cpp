#include "stern/serialize.hpp"

#include "stern/error.hpp"

namespace stern {

Json to_json(const Poly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"vars", 1}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const MPoly& p) {
  if (p.vars() == 1) return to_json(p.to_univariate());
  Json coeffs = Json::array();
  for (const auto& [e, c] : p.terms()) coeffs.push_back(Json::array({Json(e), to_string(c)}));
  return Json{{"vars", p.vars()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Poly poly_from_json(const Json& j) {
  try {
    if (j.at("vars").get<int>() != 1) throw Error(ErrorKind::VariableMismatch, "expected a univariate polynomial");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return Poly(std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

MPoly mpoly_from_json(const Json& j) {
  try {
    const int vars = j.at("vars").get<int>();
    if (vars == 1) return MPoly::from_univariate(poly_from_json(j));
    MPoly out(vars);
    for (const auto& term : j.at("coeffs")) {
      out.add_term(term.at(0).get<Exponent>(), parse_rational(term.at(1).get<std::string>()));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace stern
