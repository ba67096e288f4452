#pragma once

#include <string>

#include "invdec/unipoly.hpp"

namespace invdec {

// Univariate rational function num/den in canonical form:
//   - gcd(num, den) = 1,
//   - both have integer coefficients with no common integer factor,
//   - den has a positive leading coefficient.
// So (x, -2) normalizes to (-x, 2) and (2x+2, 4x+4) to (1, 2).
class RationalFunction {
public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational& q) : RationalFunction(UniPoly(q)) {}
  RationalFunction(const UniPoly& p);
  RationalFunction(const UniPoly& num, const UniPoly& den);  // normalizes

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  bool operator==(const RationalFunction& o) const = default;

  // formal derivative by the quotient rule, renormalized
  RationalFunction derivative() const;

  // throws DomainError when den vanishes at x
  Rational eval(const Rational& x) const;

  std::string to_string(const std::string& var = "x") const;

private:
  UniPoly num_, den_;
};

}  // namespace invdec
