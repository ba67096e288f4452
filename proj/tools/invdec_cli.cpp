#include <iostream>
#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "invdec/algext.hpp"
#include "invdec/derivsplit.hpp"
#include "invdec/errors.hpp"
#include "invdec/hyperplane.hpp"
#include "invdec/json_io.hpp"
#include "invdec/oracle.hpp"
#include "invdec/parser.hpp"
#include "invdec/realpoint.hpp"

using namespace invdec;

namespace {

const char* piece_label(Piece p) {
  switch (p) {
    case Piece::plus: return "H+";
    case Piece::zero: return "H0";
    default: return "H-";
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return parts;
}

// pi | e | algebraic:<poly>:<lo>:<hi> | digits:<path>
RealPoint parse_alpha(const std::string& spec) {
  if (spec == "pi") return RealPoint::pi();
  if (spec == "e") return RealPoint::e();
  if (spec.rfind("algebraic:", 0) == 0) {
    std::vector<std::string> parts = split(spec, ':');
    if (parts.size() != 4)
      throw DomainError("--alpha algebraic takes the form "
                        "algebraic:<poly>:<lo>:<hi>");
    RationalFunction p = parse_expr(parts[1], 1).to_univariate();
    if (p.den().degree() != 0 || !(p.den() == UniPoly(1)))
      throw DomainError("the defining polynomial must have integer "
                        "coefficients");
    return RealPoint::algebraic(p.num(),
                                Interval(Rational(parts[2]), Rational(parts[3])));
  }
  if (spec.rfind("digits:", 0) == 0)
    return RealPoint::from_digit_file(spec.substr(7));
  throw DomainError("--alpha must be pi, e, algebraic:<poly>:<lo>:<hi>, or "
                    "digits:<path>");
}

TwoPolicy parse_policy(const std::string& s) {
  if (s == "zero-with-plus") return TwoPolicy::zero_with_plus;
  if (s == "zero-with-minus") return TwoPolicy::zero_with_minus;
  throw DomainError("--policy must be zero-with-plus or zero-with-minus");
}

Rational parse_rational_flag(const std::string& s, const char* flag) {
  try {
    return Rational(s);
  } catch (const Error&) {
    throw DomainError(std::string(flag) + " expects a rational p/q literal");
  }
}

std::vector<Rational> parse_rational_list(const std::string& s,
                                          const char* flag) {
  std::vector<Rational> out;
  for (const std::string& part : split(s, ','))
    out.push_back(parse_rational_flag(part, flag));
  return out;
}

SignOptions make_sign_options(long max_bits) {
  if (max_bits < 1) throw DomainError("--max-bits must be positive");
  SignOptions opt;
  opt.max_bits = max_bits;
  opt.start_bits = std::min(opt.start_bits, max_bits);
  return opt;
}

void emit(const Json& j, bool json_out) {
  if (json_out) {
    std::cout << dump(j);
    return;
  }
  // terse human form: top-level scalars one per line
  for (const auto& [key, value] : j.items()) {
    if (value.is_structured()) continue;
    std::cout << key << ": "
              << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
  }
}

int run_classify(const std::string& alpha_spec, const std::string& expr,
                 const std::string& policy, long max_bits, bool json_out) {
  RealPoint alpha = parse_alpha(alpha_spec);
  SignOptions opt = make_sign_options(max_bits);
  MultiRationalFunction m = parse_expr(expr, 1);
  RationalFunction r = m.to_univariate();
  PieceResult pr = classify3_traced(r, alpha, opt);
  TwoClass c2 = classify2(r, alpha, parse_policy(policy), opt);

  UniPoly positivity = r.num() * r.den();
  SignResult s0 = sign_at_traced(RationalFunction(positivity), alpha, opt);
  UniPoly slope =
      r.num().derivative() * r.den() - r.num() * r.den().derivative();
  SignResult s1 = sign_at_traced(RationalFunction(slope), alpha, opt);

  Json j;
  j["input"] = Json{{"alpha", alpha.name()},
                    {"expr", m.to_string()},
                    {"policy", policy}};
  j["result"] = piece_label(pr.piece);
  j["class2"] = to_cstring(c2);
  j["certificates"] = Json::array(
      {Json{{"label", "positive at alpha"},
            {"poly", positivity.to_string()},
            {"required", to_cstring(s0.sign)},
            {"bits_used", s0.bits_used}},
       Json{{"label", "derivative combination sign at alpha"},
            {"poly", slope.to_string()},
            {"required", to_cstring(s1.sign)},
            {"bits_used", s1.bits_used}}});
  emit(j, json_out);
  return 0;
}

int run_hyperplane(const std::string& l2, const std::string& l3,
                   unsigned extend, const std::string& member, bool json_out) {
  HyperplaneKind kind = classify_params(parse_rational_flag(l2, "--l2"),
                                        parse_rational_flag(l3, "--l3"));
  Json j;
  j["input"] = Json{{"l2", l2}, {"l3", l3}};
  j.update(json_of(kind));
  if (extend > 0) {
    LambdaSeq lam = lambda_prefix(kind, extend);
    Json seq = Json::array();
    for (const QuadExt& v : lam) seq.push_back(json_of(v));
    j["lambda"] = seq;
  }
  if (!member.empty()) {
    RationalFunction p = parse_expr(member, 1).to_univariate();
    if (p.den().degree() != 0 || !(p.den() == UniPoly(1)))
      throw DomainError("--member must be a polynomial");
    j["member"] =
        Json{{"poly", p.num().to_string()},
             {"in_hyperplane", membership(p.num(), kind)}};
  }
  emit(j, json_out);
  return 0;
}

int run_witness(const std::string& descriptor, long max_bits, bool json_out) {
  FieldDescriptor d = parse_field_descriptor(descriptor);
  NumberField field(d.minpoly, d.isolating);
  SignOptions opt = make_sign_options(max_bits);
  Witness w = indecomposability_witness(field, opt);
  Json j;
  j["input"] = Json{{"field", d.minpoly.to_string()},
                    {"root", Json{{"lo", to_string(d.isolating.lo)},
                                  {"hi", to_string(d.isolating.hi)}}}};
  j.update(json_of(w));
  emit(j, json_out);
  return 0;
}

int run_verify(const std::string& suite, const std::string& alpha_spec,
               long max_degree, long height, bool rational_coeffs,
               long samples, unsigned long seed, const std::string& shifts,
               unsigned k, long max_bits, bool json_out) {
  SignOptions opt = make_sign_options(max_bits);
  Json input{{"suite", suite}};
  Report rep;
  if (suite == "closure" || suite == "translation") {
    Corpus corpus;
    corpus.max_degree = max_degree;
    corpus.height = height;
    corpus.integer_coeffs = !rational_coeffs;
    RealPoint alpha = parse_alpha(alpha_spec);
    input["alpha"] = alpha.name();
    input["max_degree"] = max_degree;
    input["height"] = height;
    input["integer_coeffs"] = !rational_coeffs;
    if (suite == "closure") {
      rep = verify_closure(alpha, corpus, opt);
    } else {
      input["shifts"] = shifts;
      rep = verify_translation(alpha, corpus,
                               parse_rational_list(shifts, "--shifts"), opt);
    }
  } else if (suite == "lift") {
    RealPoint alpha = parse_alpha(alpha_spec);
    input["alpha"] = alpha.name();
    input["samples"] = samples;
    input["seed"] = seed;
    rep = verify_lift_agreement(alpha, samples, seed, opt);
  } else if (suite == "recursion") {
    input["k"] = k;
    std::vector<HyperplaneKind> kinds = {
        HyperplaneKind::two_point(QuadExt(1), QuadExt(2)),
        HyperplaneKind::derivation(QuadExt(Rational(3, 2))),
        HyperplaneKind::complex_pair(QuadExt(1), QuadExt(2))};
    rep = verify_recursion(kinds, k);
  } else {
    throw DomainError(
        "--suite must be closure, translation, lift, or recursion");
  }
  Json j;
  j["input"] = input;
  j.update(json_of(rep));
  emit(j, json_out);
  return 0;  // a completed run reports its violations in the JSON
}

int run_plan(const std::string& points_spec, const std::string& derivs_spec,
             const std::string& expr, bool promise, long witness_height,
             long max_bits, bool json_out) {
  PointTuple tup;
  for (const std::string& part : split(points_spec, ','))
    tup.points.push_back(parse_alpha(part));
  tup.independence_promise = promise;

  std::vector<DerivationSpec> derivs;
  for (const std::string& row : split(derivs_spec, ';'))
    derivs.emplace_back(parse_rational_list(row, "--derivs"));

  PlanOptions opt;
  opt.witness_height = witness_height;
  opt.sign = make_sign_options(max_bits);
  BuiltPlan built = build_plan(derivs, tup, opt);

  Json j;
  j["input"] = Json{{"points", points_spec},
                    {"derivs", derivs_spec},
                    {"independence_promise", promise}};
  j.update(json_of(built));
  if (!expr.empty()) {
    MultiRationalFunction r = parse_expr(expr, tup.points.size());
    j["expr"] = Json{
        {"text", r.to_string()},
        {"piece", classify_n(r, tup, built.plan, opt.sign)}};
  }
  emit(j, json_out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for sign-based decompositions of positive "
               "polynomial and rational-function values"};
  app.require_subcommand(1);

  std::string alpha = "pi";
  std::string policy = "zero-with-plus";
  long max_bits = 65536;
  bool json_out = true;

  auto* classify = app.add_subcommand(
      "classify", "Classify a rational function by its slope at alpha");
  std::string expr;
  classify->add_option("--alpha", alpha, "pi|e|algebraic:<p>:<lo>:<hi>|digits:<path>");
  classify->add_option("--expr", expr, "expression in x")->required();
  classify->add_option("--policy", policy, "zero-with-plus|zero-with-minus");
  classify->add_option("--max-bits", max_bits, "precision cap");
  classify->add_flag("--json,!--no-json", json_out, "JSON output (default)");

  auto* hyperplane = app.add_subcommand(
      "hyperplane", "Classify a separating hyperplane from lambda_2, lambda_3");
  std::string l2, l3, member;
  unsigned extend = 0;
  hyperplane->add_option("--l2", l2, "rational lambda_2")->required();
  hyperplane->add_option("--l3", l3, "rational lambda_3")->required();
  hyperplane->add_option("--extend", extend, "also print lambda_0..lambda_K");
  hyperplane->add_option("--member", member, "test a polynomial's membership");
  hyperplane->add_flag("--json,!--no-json", json_out, "JSON output (default)");

  auto* witness = app.add_subcommand(
      "witness", "Indecomposability witness for a number field");
  std::string field_text, descriptor;
  std::vector<std::string> root;
  witness->add_option("--field", field_text, "monic integer polynomial in x");
  witness->add_option("--root", root, "isolating interval endpoints lo hi")
      ->expected(2);
  witness->add_option("--descriptor", descriptor,
                      "full \"field: <poly>; root in [lo, hi]\" descriptor")
      ->excludes("--field")
      ->excludes("--root");
  witness->add_option("--max-bits", max_bits, "precision cap");
  witness->add_flag("--json,!--no-json", json_out, "JSON output (default)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite, shifts = "1,-1,7";
  long max_degree = 2, height = 1, samples = 100;
  unsigned long seed = 1;
  unsigned k = 20;
  bool rational_coeffs = false;
  verify->add_option("--suite", suite, "closure|translation|lift|recursion")
      ->required();
  verify->add_option("--alpha", alpha, "base point");
  verify->add_option("--max-degree", max_degree, "corpus degree bound");
  verify->add_option("--height", height, "corpus coefficient height");
  verify->add_flag("--rational", rational_coeffs,
                   "fractional coefficient grid (default integer)");
  verify->add_option("--samples", samples, "random sample count");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--shifts", shifts, "comma-separated rational shifts");
  verify->add_option("--k", k, "recursion prefix length");
  verify->add_option("--max-bits", max_bits, "precision cap");
  verify->add_flag("--json,!--no-json", json_out, "JSON output (default)");

  auto* plan = app.add_subcommand(
      "plan", "Build an n-piece decomposition plan from derivations");
  std::string points_spec = "pi,e", derivs_spec, plan_expr;
  bool promise = false;
  long witness_height = 8;
  plan->add_option("--points", points_spec, "comma-separated base points");
  plan->add_option("--derivs", derivs_spec,
                   "semicolon-separated derivation vectors, e.g. \"1,0;0,1\"")
      ->required();
  plan->add_option("--expr", plan_expr, "classify this element under the plan");
  plan->add_flag("--promise", promise,
                 "assert the points are algebraically independent");
  plan->add_option("--witness-height", witness_height,
                   "coefficient height for witness search");
  plan->add_option("--max-bits", max_bits, "precision cap");
  plan->add_flag("--json,!--no-json", json_out, "JSON output (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classify)
      return run_classify(alpha, expr, policy, max_bits, json_out);
    if (*hyperplane)
      return run_hyperplane(l2, l3, extend, member, json_out);
    if (*witness) {
      std::string text = descriptor;
      if (text.empty()) {
        if (field_text.empty() || root.size() != 2)
          throw DomainError(
              "witness needs --field and --root, or --descriptor");
        text = "field: " + field_text + "; root in [" + root[0] + ", " +
               root[1] + "]";
      }
      return run_witness(text, max_bits, json_out);
    }
    if (*verify)
      return run_verify(suite, alpha, max_degree, height, rational_coeffs,
                        samples, seed, shifts, k, max_bits, json_out);
    if (*plan)
      return run_plan(points_spec, derivs_spec, plan_expr, promise,
                      witness_height, max_bits, json_out);
  } catch (const PrecisionError& e) {
    std::cout << dump(error_json(e.code(), e.what()));
    return 3;
  } catch (const Error& e) {
    std::cout << dump(error_json(e.code(), e.what()));
    return 2;
  } catch (const std::exception& e) {
    std::cout << dump(error_json("internal", e.what()));
    return 2;
  }
  return 2;
}
