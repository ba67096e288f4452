#include "invdec/parser.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "invdec/algext.hpp"
#include "invdec/errors.hpp"

using namespace invdec;

namespace {

Rational rat(const std::string& s) { return Rational(s); }

UniPoly poly(std::initializer_list<std::string> coeffs) {
  std::vector<Rational> cs;
  for (const auto& s : coeffs) cs.emplace_back(s);
  return UniPoly(cs);
}

// line/column of the ParseError thrown by parsing `text` at the given arity
std::pair<std::size_t, std::size_t> error_pos(const std::string& text,
                                              std::size_t arity = 1) {
  try {
    parse_expr(text, arity);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  FAIL("expected a ParseError for: ", text);
  return {0, 0};
}

}  // namespace

TEST_CASE("expression lowering") {
  SUBCASE("quotient of polynomials") {
    RationalFunction u = parse_expr("(x^2+1)/(x+2)", 1).to_univariate();
    CHECK(u.num() == poly({"1", "0", "1"}));
    CHECK(u.den() == poly({"2", "1"}));
  }
  SUBCASE("common-denominator lowering across addition") {
    MultiRationalFunction r = parse_expr("x1*x2 + 1/2", 2);
    MultiPoly num(2);
    num = num + MultiPoly::monomial(2, {1, 1}, rat("2")) +
          MultiPoly::monomial(2, {0, 0}, rat("1"));
    CHECK(r.num() == num);
    CHECK(r.den() == MultiPoly(2, rat("2")));
  }
  SUBCASE("division by the zero polynomial is caught with its position") {
    try {
      parse_expr("x/(x-x)", 1);
      FAIL("expected a ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == 2);
      CHECK(std::string(e.what()).find("zero polynomial") !=
            std::string::npos);
    }
  }
  SUBCASE("nested quotients stay exact") {
    RationalFunction u = parse_expr("1/(1+1/x)", 1).to_univariate();
    CHECK(u.num() == poly({"0", "1"}));
    CHECK(u.den() == poly({"1", "1"}));
  }
}

TEST_CASE("precedence and associativity") {
  auto uni = [](const std::string& s) {
    return parse_expr(s, 1).to_univariate();
  };
  SUBCASE("caret binds tighter than product") {
    CHECK(uni("2*x^2").num() == poly({"0", "0", "2"}));
  }
  SUBCASE("caret binds tighter than unary minus") {
    CHECK(uni("-x^2").num() == poly({"0", "0", "-1"}));
    CHECK(uni("(-x)^2").num() == poly({"0", "0", "1"}));
  }
  SUBCASE("sums and quotients associate to the left") {
    CHECK(uni("2-3-4").num() == poly({"-5"}));
    CHECK(uni("12/3/2").num() == poly({"2"}));
  }
  SUBCASE("fraction times variable") {
    RationalFunction u = uni("1/2*x");
    CHECK(u.num() == poly({"0", "1"}));
    CHECK(u.den() == poly({"2"}));
  }
  SUBCASE("zeroth power is one") {
    CHECK(uni("x^0").num() == poly({"1"}));
    CHECK(uni("(x+1)^0 - 1").num().is_zero());
  }
  SUBCASE("binomial power expands exactly") {
    CHECK(uni("(x+1)^3").num() == poly({"1", "3", "3", "1"}));
  }
}

TEST_CASE("variables and arity") {
  SUBCASE("bare x only at arity 1, x1 accepted as its alias") {
    CHECK(parse_expr("x", 1) == parse_expr("x1", 1));
  }
  SUBCASE("bare x rejected at higher arity") {
    auto [line, col] = error_pos("x1 + x", 2);
    CHECK(line == 1);
    CHECK(col == 6);
  }
  SUBCASE("index above the arity is rejected") {
    auto [line, col] = error_pos("x1*x3", 2);
    CHECK(col == 4);
  }
  SUBCASE("index zero is rejected") { error_pos("x0", 1); }
  SUBCASE("unknown identifier is rejected") {
    auto [line, col] = error_pos("y + 1", 1);
    CHECK(col == 1);
  }
  SUBCASE("arity below 1 is rejected") {
    CHECK_THROWS_AS(parse_expr("1", 0), DomainError);
  }
}

TEST_CASE("syntax error positions") {
  SUBCASE("dangling operator") {
    auto [line, col] = error_pos("x +");
    CHECK(line == 1);
    CHECK(col == 4);
  }
  SUBCASE("unclosed parenthesis") {
    auto [line, col] = error_pos("(x");
    CHECK(col == 3);
  }
  SUBCASE("positions track line breaks") {
    auto [line, col] = error_pos("x\n+ )");
    CHECK(line == 2);
    CHECK(col == 3);
  }
  SUBCASE("stray character") {
    auto [line, col] = error_pos("x $ 2");
    CHECK(col == 3);
  }
  SUBCASE("negative exponent") {
    auto [line, col] = error_pos("x^-2");
    CHECK(col == 3);
  }
  SUBCASE("parenthesized exponent") { error_pos("x^(2)"); }
  SUBCASE("chained exponent") { error_pos("x^2^3"); }
  SUBCASE("trailing garbage") {
    auto [line, col] = error_pos("x+1 )");
    CHECK(col == 5);
  }
  SUBCASE("empty input") {
    auto [line, col] = error_pos("");
    CHECK(line == 1);
    CHECK(col == 1);
  }
}

TEST_CASE("print and reparse round trip") {
  const std::vector<std::pair<std::string, std::size_t>> corpus = {
      {"(x^2+1)/(x+2)", 1},       {"x1*x2 + 1/2", 2},
      {"1/2*x^3 - x", 1},         {"-x+1", 1},
      {"0", 1},                   {"(x1-x2)/(x1+x2)", 2},
      {"x^4/(1-x)", 1},           {"((x1+x2)^2 - x1^2 - x2^2)/2", 2},
      {"3 - 2/x + x^5", 1},       {"-(x1*x2*x3)^2 + x3/7", 3}};
  for (const auto& [text, arity] : corpus) {
    CAPTURE(text);
    MultiRationalFunction first = parse_expr(text, arity);
    MultiRationalFunction again = parse_expr(first.to_string(), arity);
    CHECK(first == again);
  }
}

TEST_CASE("field descriptors") {
  SUBCASE("plain integer polynomial") {
    FieldDescriptor d = parse_field_descriptor("field: x^2 - 2; root in [1, 2]");
    CHECK(d.minpoly == poly({"-2", "0", "1"}));
    CHECK(d.isolating.lo == rat("1"));
    CHECK(d.isolating.hi == rat("2"));
  }
  SUBCASE("fractional endpoints") {
    FieldDescriptor d =
        parse_field_descriptor("field: x^3-2; root in [5/4, 3/2]");
    CHECK(d.isolating.lo == rat("5/4"));
    CHECK(d.isolating.hi == rat("3/2"));
  }
  SUBCASE("negative endpoints") {
    FieldDescriptor d =
        parse_field_descriptor("field: x^2-2; root in [-2, -1]");
    CHECK(d.isolating.lo == rat("-2"));
    CHECK(d.isolating.hi == rat("-1"));
  }
  SUBCASE("descriptor feeds the field constructor") {
    FieldDescriptor d = parse_field_descriptor("field: x^2-2; root in [1, 2]");
    NumberField f(d.minpoly, d.isolating);
    CHECK(f.degree() == 2);
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(parse_field_descriptor("field: 2*x^2-4; root in [1, 2]"),
                    ParseError);
    CHECK_THROWS_AS(parse_field_descriptor("field: x^2-1/2; root in [0, 1]"),
                    ParseError);
    CHECK_THROWS_AS(parse_field_descriptor("field: x^2-2; root in [2, 1]"),
                    ParseError);
    CHECK_THROWS_AS(parse_field_descriptor("field: x^2-2; root in [1, 1]"),
                    ParseError);
    CHECK_THROWS_AS(parse_field_descriptor("x^2-2; root in [1, 2]"),
                    ParseError);
    CHECK_THROWS_AS(parse_field_descriptor("field: x^2-2 root in [1, 2]"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_field_descriptor("field: x^2-2; root in [1, 2] extra"),
        ParseError);
    CHECK_THROWS_AS(parse_field_descriptor("field: x^2-2; root in [1, 1/0]"),
                    ParseError);
  }
}
