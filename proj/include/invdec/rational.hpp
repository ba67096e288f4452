#pragma once

#include <gmpxx.h>

#include <string>

#include "invdec/sign.hpp"

namespace invdec {

// Arbitrary-precision integers and rationals. mpq_class maintains exactly
// the canonical form required everywhere below: gcd(num, den) = 1, den > 0,
// and zero stored as 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

inline Sign sign_of(const Rational& q) { return static_cast<Sign>(sgn(q)); }
inline Sign sign_of(const Integer& n) { return static_cast<Sign>(sgn(n)); }

// Strict parse of "p" or "p/q" with an optional leading minus. Throws
// DomainError on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

Rational pow_rational(const Rational& base, unsigned long e);

Integer floor_int(const Rational& q);
Integer ceil_int(const Rational& q);

// The unique rational with the smallest denominator (smallest numerator
// magnitude on ties) strictly inside the open interval (lo, hi).
// Stern-Brocot / continued-fraction walk. Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

// True iff q is the square of a rational; on success *root gets the
// nonnegative square root. root may be null.
bool is_rational_square(const Rational& q, Rational* root);

}  // namespace invdec
