#pragma once

#include <optional>
#include <string>

#include "invdec/rational.hpp"

namespace invdec {

// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
  Rational lo, hi;

  Interval() : lo(0), hi(0) {}
  explicit Interval(const Rational& point) : lo(point), hi(point) {}
  Interval(Rational l, Rational h);  // validates lo <= hi

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

  // The sign of every point in the interval, when that is determined:
  // plus if lo > 0, minus if hi < 0, zero for the degenerate [0, 0].
  std::optional<Sign> determined_sign() const;

  std::string to_string() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator+(const Interval& a, const Rational& q);
Interval operator*(const Interval& a, const Rational& q);

// Reciprocal / quotient; the divisor interval must have a determined
// nonzero sign.
Interval reciprocal(const Interval& a);
Interval operator/(const Interval& a, const Interval& b);

// Smallest interval containing {x^e : x in a}.
Interval pow(const Interval& a, unsigned e);

Interval intersect(const Interval& a, const Interval& b);  // must overlap

// Enclosure of sqrt(q) of width <= 2^-bits. Requires q >= 0.
Interval sqrt_enclosure(const Rational& q, long bits);

}  // namespace invdec
