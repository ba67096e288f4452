#include "invdec/ratfun.hpp"

#include "invdec/errors.hpp"

namespace invdec {

namespace {

// lcm of the coefficient denominators (1 for the zero polynomial)
Integer denominator_lcm(const UniPoly& p) {
  Integer l(1);
  for (const Rational& c : p.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  return l;
}

Integer integer_content(const UniPoly& p) {
  Integer g(0);
  for (const Rational& c : p.coeffs())
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
  return g;
}

}  // namespace

RationalFunction::RationalFunction(const UniPoly& p) : RationalFunction(p, UniPoly(Rational(1))) {}

RationalFunction::RationalFunction(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw DomainError("zero_denominator", "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = UniPoly();
    den_ = UniPoly(Rational(1));
    return;
  }
  UniPoly n = num, d = den;
  UniPoly g = gcd(n, d);
  if (g.degree() > 0) {
    n = exact_divide(n, g);
    d = exact_divide(d, g);
  }
  // scale so den is integer primitive with a positive leading coefficient
  Rational c = content(d);
  if (sgn(d.leading()) < 0) c = -c;
  n = n.scaled(1 / c);
  d = d.scaled(1 / c);
  // clear num's coefficient denominators into both, then strip the shared
  // integer factor
  Integer m = denominator_lcm(n);
  if (m != 1) {
    n = n.scaled(Rational(m));
    d = d.scaled(Rational(m));
  }
  Integer e;
  mpz_gcd(e.get_mpz_t(), integer_content(n).get_mpz_t(), integer_content(d).get_mpz_t());
  if (e != 1) {
    Rational inv = 1 / Rational(e);
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DomainError("zero_denominator", "division by the zero function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (sgn(d) == 0) throw DomainError("zero_denominator", "denominator vanishes at the point");
  return num_.eval(x) / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_ == UniPoly(Rational(1))) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace invdec
