#include "parkspace/serialize.hpp"

namespace parkspace {

Json rational_to_json(const Rational& r) {
  return Json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Rational rational_from_json(const Json& j) {
  Rational r(Integer(j.at(0).get<std::string>()), Integer(j.at(1).get<std::string>()));
  r.canonicalize();
  return r;
}

Json laurent_to_json(const LaurentPoly& l) {
  Json coeffs = Json::array();
  for (const auto& c : l.p.coeffs()) coeffs.push_back(rational_to_json(c));
  return Json{{"min_deg", l.min_deg}, {"coeffs", coeffs}};
}

Json poly_to_json(const Poly& p) { return laurent_to_json(LaurentPoly(p)); }

LaurentPoly laurent_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  return LaurentPoly(j.at("min_deg").get<long>(), Poly(std::move(coeffs)));
}

Poly poly_from_json(const Json& j) {
  LaurentPoly l = laurent_from_json(j);
  if (l.min_deg < 0) throw std::domain_error("expected a polynomial, got negative min_deg");
  return l.p.shifted(l.min_deg);
}

Json rational_function_to_json(const RationalFunction& f) {
  return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

Json upoly_to_json(const UPoly& h) {
  Json coeffs = Json::array();
  for (const auto& c : h.coeffs()) coeffs.push_back(rational_function_to_json(c));
  return Json{{"u_coeffs", coeffs}};
}

Json residue_condition_to_json(const ResidueCondition& c) {
  Json j{{"modulus", c.modulus}, {"residues", c.residues}};
  if (c.min_k) j["min_k"] = *c.min_k;
  if (!c.extra_k.empty()) j["extra_k"] = c.extra_k;
  return j;
}

ResidueCondition residue_condition_from_json(const Json& j) {
  ResidueCondition c;
  c.modulus = j.at("modulus").get<long>();
  c.residues = j.at("residues").get<std::vector<long>>();
  if (j.contains("min_k")) c.min_k = j.at("min_k").get<long>();
  if (j.contains("extra_k")) c.extra_k = j.at("extra_k").get<std::vector<long>>();
  return c;
}

}  // namespace parkspace
