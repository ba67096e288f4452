#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "invdec/interval.hpp"
#include "invdec/rational.hpp"

namespace invdec {

// Dense univariate polynomial over Q. c_[i] is the coefficient of x^i and
// the vector never ends in a zero; the zero polynomial is the empty vector
// with degree -1.
class UniPoly {
public:
  UniPoly() = default;
  UniPoly(const Rational& c);
  UniPoly(long c) : UniPoly(Rational(c)) {}
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly variable();
  // coefficients listed low degree first: from_coeffs({-1, 0, 1}) = x^2 - 1
  static UniPoly from_coeffs(std::initializer_list<long> low_to_high);
  static UniPoly monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(std::size_t i) const;  // zero beyond the degree
  const Rational& leading() const;             // requires a nonzero polynomial
  const std::vector<Rational>& coeffs() const { return c_; }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Rational& q) const;
  UniPoly pow(unsigned e) const;
  bool operator==(const UniPoly& o) const = default;

  UniPoly derivative() const;
  Rational eval(const Rational& x) const;

  std::string to_string(const std::string& var = "x") const;

private:
  std::vector<Rational> c_;
  void trim();
};

// Horner evaluation in exact interval arithmetic; the result contains p(x)
// for every x in the input interval.
Interval eval_on(const UniPoly& p, const Interval& x);

// Euclidean division over Q: a = q*b + r with deg r < deg b. b nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// Quotient of an exact division; throws if b does not divide a.
UniPoly exact_divide(const UniPoly& a, const UniPoly& b);

bool divides(const UniPoly& d, const UniPoly& a);

// Polynomial gcd computed on integer primitive parts with a pseudo-remainder
// loop (content stripped each round, so coefficients stay modest). Result is
// monic; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Positive rational c such that p/c has integer coefficients with gcd 1;
// content(0) = 0.
Rational content(const UniPoly& p);

// p/content(p): integer coefficients, content 1, sign of the leading
// coefficient preserved.
UniPoly primitive_part(const UniPoly& p);

bool is_squarefree(const UniPoly& p);  // requires nonzero

// Number of distinct real roots of p in the open interval (lo, hi), by Sturm
// chains. Requires p nonzero, p(lo) != 0 and p(hi) != 0.
long count_roots_open(const UniPoly& p, const Rational& lo, const Rational& hi);

}  // namespace invdec
