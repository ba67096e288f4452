#pragma once

#include <map>
#include <string>
#include <vector>

#include "invdec/interval.hpp"
#include "invdec/rational.hpp"

namespace invdec {

// Sparse multivariate polynomial over Q: exponent vector -> nonzero
// coefficient. All exponent vectors have length arity(); the map's
// lexicographic key order (x1 most significant) doubles as the term order.
class MultiPoly {
public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Rational>;

  explicit MultiPoly(std::size_t arity) : arity_(arity) {}
  MultiPoly(std::size_t arity, const Rational& c);
  static MultiPoly variable(std::size_t arity, std::size_t index);  // 0-based
  static MultiPoly monomial(std::size_t arity, Exponents e, const Rational& c);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()
  unsigned total_degree() const;    // 0 for constants and zero
  unsigned degree_in(std::size_t var) const;
  const TermMap& terms() const { return t_; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Rational& q) const;
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const = default;

  // d/dx_var, 0-based variable index (variable x_i of the surface syntax is
  // index i-1 here)
  MultiPoly partial_derivative(std::size_t var) const;

  Rational eval(const std::vector<Rational>& xs) const;
  // contains p(x) for every x in the box
  Interval eval_on(const std::vector<Interval>& box) const;

  // leading term under lex; requires a nonzero polynomial
  const std::pair<const Exponents, Rational>& lex_leading() const;

  // prints with variable "x" when arity is 1, else x1..xm
  std::string to_string() const;

private:
  std::size_t arity_;
  TermMap t_;
  void add_term(const Exponents& e, const Rational& c);
  static void check_same_arity(const MultiPoly& a, const MultiPoly& b);
};

// Positive scalar c such that p/c has integer coefficients with gcd 1;
// content(0) = 0.
Rational content(const MultiPoly& p);
MultiPoly primitive_part(const MultiPoly& p);

// Quotient of an exact division; throws if b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

// Content-based recursive gcd (pseudo-remainder sequences in the lowest
// active variable). The result is an integer primitive polynomial with a
// positive lex-leading coefficient; scalar factors are units and are
// normalized away, so gcd of coprime inputs is the constant 1.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace invdec
