#pragma once

#include <string>

#include "invdec/interval.hpp"
#include "invdec/rational.hpp"
#include "invdec/realpoint.hpp"
#include "invdec/unipoly.hpp"

namespace invdec {

// Exact arithmetic in a real quadratic extension: values a + b*sqrt(d) with
// a, b rational and d a positive nonsquare integer. Rationals are the b = 0
// case and carry no radicand, so they mix freely with any extension; two
// genuinely irrational values combine only when their radicands agree.
//
// The radicand is canonical: square factors are folded into b, so 1+sqrt(8)
// and 1+2*sqrt(2) construct the same value. Canonical d makes equality and
// sign tests exact: a + b*sqrt(d) = 0 with b != 0 is impossible, and sign
// comparisons reduce to comparing a^2 against b^2 d.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), d_(0) {}
  QuadExt(const Rational& a) : a_(a), b_(0), d_(0) {}  // NOLINT: implicit
  QuadExt(long a) : a_(a), b_(0), d_(0) {}             // NOLINT: implicit

  // a + b*sqrt(d). Requires d > 0; d is reduced to its squarefree core with
  // the extracted square root folded into b. If d is a perfect square the
  // value collapses to a rational.
  QuadExt(const Rational& a, const Rational& b, const Integer& d);

  // Exact square root of a nonnegative rational, as sqrt(num*den)/den.
  static QuadExt sqrt_of(const Rational& r);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  // Requires is_rational().
  const Rational& rational_value() const;

  Sign sign() const;
  bool operator==(const QuadExt& o) const = default;

  QuadExt operator-() const;
  QuadExt conjugate() const;  // a - b*sqrt(d)

  // Arithmetic requires compatible radicands (either operand rational, or
  // both carrying the same d); otherwise DomainError, since the product
  // would leave every quadratic extension this class can represent.
  QuadExt operator+(const QuadExt& o) const;
  QuadExt operator-(const QuadExt& o) const;
  QuadExt operator*(const QuadExt& o) const;
  QuadExt operator/(const QuadExt& o) const;  // DomainError on zero divisor

  // Monic minimal polynomial over Q: x - a for rationals, else
  // x^2 - 2a x + (a^2 - b^2 d), irreducible because d is nonsquare.
  UniPoly minpoly() const;

  // Rational enclosure of width at most 2^-bits.
  Interval enclosure(long bits) const;

  // An interval that isolates this value from its conjugate (for b != 0),
  // suitable for RealPoint::algebraic.
  Interval isolating() const;

  // The value as a RealPoint (exact for rationals, algebraic otherwise).
  RealPoint to_real_point() const;

  // "3", "-1/2", "sqrt(5)", "1/2+1/2*sqrt(5)", "1-sqrt(2)".
  std::string to_string() const;

 private:
  // Bypasses radicand normalization; d must already be a canonical core.
  static QuadExt raw(Rational a, Rational b, Integer d);

  Rational a_, b_;
  Integer d_;  // squarefree core, > 1 when b_ != 0; 0 when rational
};

QuadExt operator+(const Rational& q, const QuadExt& x);
QuadExt operator*(const Rational& q, const QuadExt& x);

// p evaluated at x by Horner's rule (DomainError if radicands clash, which
// cannot happen for a plain polynomial).
QuadExt eval_at(const UniPoly& p, const QuadExt& x);

}  // namespace invdec
