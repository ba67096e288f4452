#include "invdec/interval.hpp"

#include <algorithm>

#include "invdec/errors.hpp"

namespace invdec {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw DomainError("interval endpoints out of order");
}

std::optional<Sign> Interval::determined_sign() const {
  if (sgn(lo) > 0) return Sign::plus;
  if (sgn(hi) < 0) return Sign::minus;
  if (sgn(lo) == 0 && sgn(hi) == 0) return Sign::zero;
  return std::nullopt;
}

std::string Interval::to_string() const {
  return "[" + invdec::to_string(lo) + ", " + invdec::to_string(hi) + "]";
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lo - b.hi, a.hi - b.lo);
}

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                  std::max(std::max(p1, p2), std::max(p3, p4)));
}

Interval operator+(const Interval& a, const Rational& q) {
  return Interval(a.lo + q, a.hi + q);
}

Interval operator*(const Interval& a, const Rational& q) {
  if (sgn(q) >= 0) return Interval(a.lo * q, a.hi * q);
  return Interval(a.hi * q, a.lo * q);
}

Interval reciprocal(const Interval& a) {
  auto s = a.determined_sign();
  if (!s || *s == Sign::zero)
    throw DomainError("zero_denominator", "reciprocal of an interval containing zero");
  return Interval(1 / a.hi, 1 / a.lo);
}

Interval operator/(const Interval& a, const Interval& b) { return a * reciprocal(b); }

Interval pow(const Interval& a, unsigned e) {
  if (e == 0) return Interval(Rational(1));
  Rational plo = pow_rational(a.lo, e), phi = pow_rational(a.hi, e);
  if (e % 2 == 1 || sgn(a.lo) >= 0) return Interval(plo, phi);
  if (sgn(a.hi) <= 0) return Interval(phi, plo);
  // even power of an interval straddling zero
  return Interval(Rational(0), std::max(plo, phi));
}

Interval intersect(const Interval& a, const Interval& b) {
  if (!a.intersects(b)) throw DomainError("intervals do not intersect");
  return Interval(std::max(a.lo, b.lo), std::min(a.hi, b.hi));
}

Interval sqrt_enclosure(const Rational& q, long bits) {
  if (sgn(q) < 0) throw DomainError("sqrt of a negative rational");
  if (sgn(q) == 0) return Interval(Rational(0));
  if (bits < 0) bits = 0;
  // sqrt(n/m) = sqrt(n*m)/m; scale by 4^k so the integer sqrt carries
  // k extra binary digits: lo = floor(sqrt(n*m*4^k))/(m*2^k)
  const Integer& n = q.get_num();
  const Integer& m = q.get_den();
  Integer scaled = n * m;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * static_cast<unsigned long>(bits));
  Integer s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  Integer denom = m;
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), static_cast<unsigned long>(bits));
  Rational lo = Rational(s) / Rational(denom);
  Rational hi = Rational(s + 1) / Rational(denom);
  lo.canonicalize();
  hi.canonicalize();
  return Interval(lo, hi);
}

}  // namespace invdec
