#pragma once

#include <string>

#include "invdec/multipoly.hpp"
#include "invdec/ratfun.hpp"

namespace invdec {

// Multivariate rational function num/den in the same canonical form as
// RationalFunction: gcd(num, den) = 1, integer coefficients with no shared
// integer factor, and a positive lex-leading coefficient on den.
class MultiRationalFunction {
public:
  explicit MultiRationalFunction(std::size_t arity)
      : num_(arity), den_(arity, Rational(1)) {}
  MultiRationalFunction(std::size_t arity, const Rational& q)
      : MultiRationalFunction(MultiPoly(arity, q)) {}
  MultiRationalFunction(const MultiPoly& p);
  MultiRationalFunction(const MultiPoly& num, const MultiPoly& den);  // normalizes

  std::size_t arity() const { return num_.arity(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  MultiRationalFunction operator-() const;
  friend MultiRationalFunction operator+(const MultiRationalFunction& a,
                                         const MultiRationalFunction& b);
  friend MultiRationalFunction operator-(const MultiRationalFunction& a,
                                         const MultiRationalFunction& b);
  friend MultiRationalFunction operator*(const MultiRationalFunction& a,
                                         const MultiRationalFunction& b);
  friend MultiRationalFunction operator/(const MultiRationalFunction& a,
                                         const MultiRationalFunction& b);
  bool operator==(const MultiRationalFunction& o) const = default;

  // formal partial derivative d/dx_var by the quotient rule, renormalized;
  // var is 0-based (surface variable x_i is index i-1)
  MultiRationalFunction partial_derivative(std::size_t var) const;

  Rational eval(const std::vector<Rational>& xs) const;

  std::string to_string() const;

  // conversions for arity-1 values
  RationalFunction to_univariate() const;  // requires arity() == 1
  static MultiRationalFunction from_univariate(const RationalFunction& r);

private:
  MultiPoly num_, den_;
};

}  // namespace invdec
