#include "invdec/json_io.hpp"

namespace invdec {

Json json_of(const Rational& q) { return to_string(q); }

Json json_of(const QuadExt& q) { return q.to_string(); }

Json json_of(const UniPoly& p) { return p.to_string(); }

Json json_of(const HyperplaneKind& kind) {
  Json j;
  j["kind"] = to_cstring(kind.family());
  switch (kind.family()) {
    case Family::two_point:
      j["beta"] = json_of(kind.beta());
      j["gamma"] = json_of(kind.gamma());
      break;
    case Family::derivation:
      j["delta"] = kind.has_exact_delta() ? json_of(kind.delta())
                                          : Json(kind.delta_point().name());
      break;
    case Family::complex_pair:
      j["u"] = json_of(kind.u());
      j["v"] = json_of(kind.v());
      break;
  }
  return j;
}

Json json_of(const CertifiedInequality& cert) {
  Json j;
  j["label"] = cert.label;
  j["poly"] = json_of(cert.poly);
  switch (cert.kind) {
    case CertifiedInequality::Kind::at_alpha:
      j["at"] = "alpha";
      break;
    case CertifiedInequality::Kind::at_exact:
      j["at"] = json_of(cert.where);
      break;
    case CertifiedInequality::Kind::im_power:
      j["re"] = json_of(cert.re);
      j["im"] = json_of(cert.im);
      j["power"] = cert.power;
      break;
  }
  j["required"] = to_cstring(cert.required);
  j["bits_used"] = cert.bits_used;
  return j;
}

Json json_of(const Counterexample& cex) {
  Json j;
  j["witnesses"] = Json::array();
  for (const UniPoly& w : cex.witnesses) j["witnesses"].push_back(json_of(w));
  if (cex.power) j["power"] = *cex.power;
  j["certificates"] = Json::array();
  for (const CertifiedInequality& c : cex.certificates)
    j["certificates"].push_back(json_of(c));
  return j;
}

Json json_of(const Violation& v) {
  return Json{{"inputs", v.inputs}, {"expected", v.expected}, {"got", v.got}};
}

Json json_of(const Report& rep) {
  Json j;
  j["suite"] = rep.suite;
  j["cases"] = rep.cases;
  j["mode"] = rep.mode;
  j["max_bits_used"] = rep.max_bits_used;
  j["passed"] = rep.passed();
  j["violations"] = Json::array();
  for (const Violation& v : rep.violations) j["violations"].push_back(json_of(v));
  return j;
}

Json json_of(const Witness& w) {
  Json j;
  j["kernel"] = w.kernel_check ? "ok" : "violated";
  j["mprime_sign"] = to_cstring(w.derivative_sign);
  j["precision_used"] = w.precision_used;
  return j;
}

Json json_of(const DerivationSpec& d) {
  Json j = Json::array();
  for (const Rational& c : d.coefficients) j.push_back(json_of(c));
  return j;
}

Json json_of(const BuiltPlan& built) {
  Json j;
  j["arity"] = built.plan.arity;
  j["pieces"] = built.plan.pieces();
  j["steps"] = Json::array();
  for (const SplitStep& s : built.plan.steps)
    j["steps"].push_back(Json{{"derivation", json_of(s.derivation)},
                              {"target_piece", s.target_piece},
                              {"zero_side", to_cstring(s.zero_side)}});
  j["witnesses"] = Json::array();
  for (const MultiRationalFunction& w : built.witnesses)
    j["witnesses"].push_back(w.to_string());
  return j;
}

Json error_json(const std::string& code, const std::string& message) {
  return Json{{"error", Json{{"code", code}, {"message", message}}}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace invdec
