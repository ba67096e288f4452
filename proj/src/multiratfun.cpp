#include "invdec/multiratfun.hpp"

#include "invdec/errors.hpp"

namespace invdec {

namespace {

Integer denominator_lcm(const MultiPoly& p) {
  Integer l(1);
  for (const auto& [e, c] : p.terms())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  return l;
}

Integer integer_content(const MultiPoly& p) {
  Integer g(0);
  for (const auto& [e, c] : p.terms())
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
  return g;
}

}  // namespace

MultiRationalFunction::MultiRationalFunction(const MultiPoly& p)
    : MultiRationalFunction(p, MultiPoly(p.arity(), Rational(1))) {}

MultiRationalFunction::MultiRationalFunction(const MultiPoly& num, const MultiPoly& den)
    : num_(num.arity()), den_(num.arity()) {
  if (num.arity() != den.arity())
    throw DomainError("arity_mismatch", "numerator and denominator arities differ");
  if (den.is_zero())
    throw DomainError("zero_denominator", "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = MultiPoly(num.arity(), Rational(1));
    return;
  }
  MultiPoly n = num, d = den;
  MultiPoly g = gcd(n, d);
  if (!g.is_constant()) {
    n = exact_divide(n, g);
    d = exact_divide(d, g);
  }
  Rational c = content(d);
  if (sgn(d.lex_leading().second) < 0) c = -c;
  n = n.scaled(1 / c);
  d = d.scaled(1 / c);
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

MultiRationalFunction MultiRationalFunction::operator-() const {
  MultiRationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

MultiRationalFunction operator+(const MultiRationalFunction& a, const MultiRationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

MultiRationalFunction operator-(const MultiRationalFunction& a, const MultiRationalFunction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

MultiRationalFunction operator*(const MultiRationalFunction& a, const MultiRationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

MultiRationalFunction operator/(const MultiRationalFunction& a, const MultiRationalFunction& b) {
  if (b.is_zero()) throw DomainError("zero_denominator", "division by the zero function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

MultiRationalFunction MultiRationalFunction::partial_derivative(std::size_t var) const {
  return {num_.partial_derivative(var) * den_ - num_ * den_.partial_derivative(var),
          den_ * den_};
}

Rational MultiRationalFunction::eval(const std::vector<Rational>& xs) const {
  Rational d = den_.eval(xs);
  if (sgn(d) == 0) throw DomainError("zero_denominator", "denominator vanishes at the point");
  return num_.eval(xs) / d;
}

std::string MultiRationalFunction::to_string() const {
  if (den_ == MultiPoly(arity(), Rational(1))) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction MultiRationalFunction::to_univariate() const {
  if (arity() != 1) throw DomainError("arity_mismatch", "expected an arity-1 function");
  auto lift = [](const MultiPoly& p) {
    std::vector<Rational> c(p.is_zero() ? 0 : p.degree_in(0) + 1, Rational(0));
    for (const auto& [e, q] : p.terms()) c[e[0]] = q;
    return UniPoly(std::move(c));
  };
  return RationalFunction(lift(num_), lift(den_));
}

MultiRationalFunction MultiRationalFunction::from_univariate(const RationalFunction& r) {
  auto lower = [](const UniPoly& p) {
    MultiPoly m(1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
      m += MultiPoly::monomial(1, {static_cast<unsigned>(i)}, p.coeff(i));
    return m;
  };
  return {lower(r.num()), lower(r.den())};
}

}  // namespace invdec
