#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "invdec/errors.hpp"
#include "invdec/multipoly.hpp"
#include "invdec/multiratfun.hpp"
#include "invdec/ratfun.hpp"
#include "invdec/rational.hpp"
#include "invdec/realpoint.hpp"
#include "invdec/unipoly.hpp"

using namespace invdec;

namespace {

Rational rat(const char* s) { return parse_rational(s); }

Rational two_pow_neg(long bits) {
  return Rational(1) / Rational(Integer(1) << static_cast<unsigned long>(bits));
}

// 30-digit brackets, frozen from standard tables.
const char* kPiLo = "3141592653589793238462643383279/1000000000000000000000000000000";
const char* kPiHi = "3141592653589793238462643383280/1000000000000000000000000000000";
const char* kELo = "2718281828459045235360287471352/1000000000000000000000000000000";
const char* kEHi = "2718281828459045235360287471353/1000000000000000000000000000000";

RationalFunction poly(std::initializer_list<long> low_to_high) {
  return RationalFunction(UniPoly::from_coeffs(low_to_high));
}

}  // namespace

TEST_CASE("pi enclosures bracket the constant at every precision") {
  Interval coarse = pi_enclosure(2);
  CHECK(coarse.width() <= rat("1/4"));
  // wide enough that it must cover the 30-digit bracket
  CHECK(coarse.lo <= rat(kPiLo));
  CHECK(coarse.hi >= rat(kPiHi));

  Interval fine = pi_enclosure(110);
  CHECK(fine.width() <= two_pow_neg(110));
  // narrow enough that it must sit inside the bracket
  CHECK(fine.lo >= rat(kPiLo));
  CHECK(fine.hi <= rat(kPiHi));
  CHECK(fine.lo >= coarse.lo);
  CHECK(fine.hi <= coarse.hi);
}

TEST_CASE("e enclosures bracket the constant at every precision") {
  Interval coarse = e_enclosure(4);
  CHECK(coarse.width() <= rat("1/16"));
  CHECK(coarse.lo <= rat(kELo));
  CHECK(coarse.hi >= rat(kEHi));

  Interval fine = e_enclosure(110);
  CHECK(fine.width() <= two_pow_neg(110));
  CHECK(fine.lo >= rat(kELo));
  CHECK(fine.hi <= rat(kEHi));
}

TEST_CASE("refine caches and narrows") {
  RealPoint p = RealPoint::pi();
  Interval a = p.refine(8);
  Interval b = p.refine(80);
  CHECK(b.width() <= two_pow_neg(80));
  CHECK(b.lo >= a.lo);
  CHECK(b.hi <= a.hi);
  // a cached wide request returns the narrow cache, still a valid enclosure
  Interval c = p.refine(8);
  CHECK(c.width() <= two_pow_neg(8));
}

TEST_CASE("signs at pi") {
  RealPoint p = RealPoint::pi();
  CHECK(sign_at(poly({-3, 1}), p) == Sign::plus);    // x - 3
  CHECK(sign_at(poly({22, -7}), p) == Sign::plus);   // 22 - 7x, pi < 22/7
  CHECK(sign_at(poly({-355, 113}), p) == Sign::minus);  // 113x - 355
  // (x^2+1)/(x+2) is positive; 1/(x - 22/7) is negative
  CHECK(sign_at(RationalFunction(UniPoly::from_coeffs({1, 0, 1}),
                                 UniPoly::from_coeffs({2, 1})),
                p) == Sign::plus);
  CHECK(sign_at(RationalFunction(UniPoly(Rational(1)),
                                 UniPoly(std::vector<Rational>{rat("-22/7"),
                                                               Rational(1)})),
                p) == Sign::minus);
  // a reduced nonzero polynomial never vanishes at a transcendental point,
  // so zero is only reported for the zero function
  CHECK(sign_at(RationalFunction(), p) == Sign::zero);
}

TEST_CASE("algebraic point: sqrt(2)") {
  UniPoly m = UniPoly::from_coeffs({-2, 0, 1});
  RealPoint s = RealPoint::algebraic(m, Interval(Rational(1), Rational(2)));
  CHECK(s.is_algebraic());
  REQUIRE(s.minpoly() != nullptr);
  CHECK(*s.minpoly() == m);
  CHECK(!s.exact_rational().has_value());

  SignResult at_min = sign_at_traced(RationalFunction(m), s);
  CHECK(at_min.sign == Sign::zero);
  CHECK(at_min.bits_used == 0);  // resolved by divisibility, not refinement
  // x^3 - 2x = x(x^2 - 2) also vanishes
  CHECK(sign_at(poly({0, -2, 0, 1}), s) == Sign::zero);
  CHECK(sign_at(poly({-3, 2}), s) == Sign::minus);  // 2x - 3
  CHECK(sign_at(poly({-7, 5}), s) == Sign::plus);   // 5x - 7, 7/5 < sqrt(2)
}

TEST_CASE("algebraic point of degree 1 is exact") {
  UniPoly m(std::vector<Rational>{rat("-1/2"), Rational(1)});  // x - 1/2
  RealPoint h = RealPoint::algebraic(m, Interval(Rational(0), Rational(1)));
  REQUIRE(h.exact_rational().has_value());
  CHECK(*h.exact_rational() == rat("1/2"));
  SignResult r = sign_at_traced(poly({-1, 3}), h);  // 3x - 1 at 1/2
  CHECK(r.sign == Sign::plus);
  CHECK(r.bits_used == 0);
  CHECK(sign_at(poly({-1, 2}), h) == Sign::zero);  // 2x - 1
}

TEST_CASE("algebraic construction rejects bad inputs") {
  UniPoly sq = UniPoly::from_coeffs({1, -2, 1});  // (x-1)^2
  CHECK_THROWS_AS(RealPoint::algebraic(sq, Interval(Rational(0), Rational(2))),
                  DomainError);
  UniPoly two_roots = UniPoly::from_coeffs({2, -3, 1});  // (x-1)(x-2)
  // both roots inside: endpoint signs agree
  CHECK_THROWS_AS(
      RealPoint::algebraic(two_roots, Interval(Rational(0), Rational(3))),
      DomainError);
  // isolates the root 1, but the polynomial is not a minimal polynomial
  CHECK_THROWS_AS(
      RealPoint::algebraic(two_roots, Interval(Rational(0), rat("3/2"))),
      DomainError);
  UniPoly m = UniPoly::from_coeffs({-2, 0, 1});
  // no sign change over (2, 3)
  CHECK_THROWS_AS(RealPoint::algebraic(m, Interval(Rational(2), Rational(3))),
                  DomainError);
  // denominator vanishing exactly at the point
  RealPoint s = RealPoint::algebraic(m, Interval(Rational(1), Rational(2)));
  CHECK_THROWS_AS(sign_at(RationalFunction(UniPoly(Rational(1)), m), s),
                  DomainError);
}

TEST_CASE("digit file point") {
  const char* path = "digits_test_tmp.txt";
  {
    std::ofstream f(path);
    f << "decimal 20\n3.14159265358979323846\n";
  }
  RealPoint p = RealPoint::from_digit_file(path);
  CHECK(sign_at(poly({-3, 1}), p) == Sign::plus);
  CHECK(sign_at(RationalFunction(UniPoly(std::vector<Rational>{
                    rat("-22/7"), Rational(1)})),
                p) == Sign::minus);
  // a separation finer than 20 digits cannot resolve and must say so
  Rational inside = rat("3141592653589793238465/1000000000000000000000");
  CHECK_THROWS_AS(
      sign_at(RationalFunction(UniPoly(std::vector<Rational>{-inside,
                                                             Rational(1)})),
              p),
      PrecisionError);
  std::remove(path);
}

TEST_CASE("digit file rejects malformed input") {
  const char* path = "digits_bad_tmp.txt";
  {
    std::ofstream f(path);
    f << "binary 20\n3.14\n";
  }
  CHECK_THROWS_AS(RealPoint::from_digit_file(path), DomainError);
  std::remove(path);
  CHECK_THROWS_AS(RealPoint::from_digit_file("does_not_exist_tmp.txt"),
                  DomainError);
}

TEST_CASE("tuple signs and the independence promise") {
  MultiPoly x1 = MultiPoly::variable(2, 0);
  MultiPoly x2 = MultiPoly::variable(2, 1);
  MultiRationalFunction diff(x1 - x2);
  MultiRationalFunction prod_minus_8(x1 * x2 - MultiPoly(2, Rational(8)));

  PointTuple unpledged{{RealPoint::pi(), RealPoint::e()}, false};
  CHECK_THROWS_AS(sign_at_tuple(diff, unpledged), DomainError);

  PointTuple pe{{RealPoint::pi(), RealPoint::e()}, true};
  CHECK(sign_at_tuple(diff, pe) == Sign::plus);          // pi > e
  CHECK(sign_at_tuple(prod_minus_8, pe) == Sign::plus);  // pi*e > 8
  CHECK(sign_at_tuple(MultiRationalFunction(2), pe) == Sign::zero);

  // rational tuples need no promise
  RealPoint half = RealPoint::algebraic(
      UniPoly(std::vector<Rational>{rat("-1/2"), Rational(1)}),
      Interval(Rational(0), Rational(1)));
  RealPoint third = RealPoint::algebraic(
      UniPoly(std::vector<Rational>{rat("-1/3"), Rational(1)}),
      Interval(Rational(0), Rational(1)));
  PointTuple rats{{half, third}, false};
  CHECK(sign_at_tuple(diff, rats) == Sign::plus);

  // arity mismatch
  PointTuple one{{RealPoint::pi()}, true};
  CHECK_THROWS_AS(sign_at_tuple(diff, one), DomainError);
}
