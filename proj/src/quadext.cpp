#include "invdec/quadext.hpp"

#include <utility>

#include "invdec/errors.hpp"

namespace invdec {

namespace {

// Pull square factors out of d by trial division (complete for d <= 10^12),
// then fold the remainder if it is itself a perfect square. Returns
// {root, core} with d = root^2 * core and core not a perfect square unless
// core = 1. Square factors with a prime divisor above 10^6 survive in the
// core; that costs canonicality of the radicand, never correctness of sign
// or arithmetic, because the perfect-square check below is complete.
std::pair<Integer, Integer> extract_square(const Integer& d) {
  Integer core = d;
  Integer root = 1;
  for (Integer f = 2; f <= 1000000 && f * f <= core; ++f) {
    Integer ff = f * f;
    while (mpz_divisible_p(core.get_mpz_t(), ff.get_mpz_t())) {
      core /= ff;
      root *= f;
    }
  }
  if (mpz_perfect_square_p(core.get_mpz_t())) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), core.get_mpz_t());
    root *= s;
    core = 1;
  }
  return {root, core};
}

}  // namespace

QuadExt::QuadExt(const Rational& a, const Rational& b, const Integer& d)
    : a_(a), b_(b), d_(d) {
  if (b_ == 0) {
    d_ = 0;
    return;
  }
  if (d_ <= 0)
    throw DomainError("nonpositive_radicand",
                      "radicand must be positive, got " + invdec::to_string(d_));
  auto [root, core] = extract_square(d_);
  if (core == 1) {
    a_ += b_ * Rational(root);
    b_ = 0;
    d_ = 0;
    return;
  }
  b_ *= Rational(root);
  d_ = core;
}

QuadExt QuadExt::sqrt_of(const Rational& r) {
  if (r < 0)
    throw DomainError("negative_radicand",
                      "square root of negative rational " + invdec::to_string(r));
  if (r == 0) return QuadExt();
  // sqrt(p/q) = sqrt(p*q)/q
  return QuadExt(Rational(0), Rational(1, r.get_den()),
                 r.get_num() * r.get_den());
}

const Rational& QuadExt::rational_value() const {
  if (!is_rational())
    throw DomainError("irrational_value",
                      to_string() + " is not rational");
  return a_;
}

Sign QuadExt::sign() const {
  if (b_ == 0) return sign_of(a_);
  if (a_ == 0) return sign_of(b_);
  if (sgn(a_) == sgn(b_)) return sign_of(a_);
  // Opposite signs: |a| vs |b|*sqrt(d) decides, and a^2 = b^2 d is
  // impossible because d is not a perfect square.
  return a_ * a_ > b_ * b_ * Rational(d_) ? sign_of(a_) : sign_of(b_);
}

QuadExt QuadExt::operator-() const {
  QuadExt r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.d_ = d_;
  return r;
}

QuadExt QuadExt::conjugate() const {
  QuadExt r;
  r.a_ = a_;
  r.b_ = -b_;
  r.d_ = d_;
  return r;
}

namespace {

// Radicand for the combination of x and y: fails only when both are
// irrational with different cores.
Integer joint_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational()) return x.d();
  if (x.d() != y.d())
    throw DomainError("incompatible_radicands",
                      "cannot combine sqrt(" + to_string(x.d()) +
                          ") with sqrt(" + to_string(y.d()) + ")");
  return x.d();
}

}  // namespace

QuadExt QuadExt::raw(Rational a, Rational b, Integer d) {
  QuadExt r;
  r.a_ = std::move(a);
  r.b_ = std::move(b);
  r.d_ = r.b_ == 0 ? Integer(0) : std::move(d);
  return r;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
  Integer d = joint_radicand(*this, o);
  return raw(a_ + o.a_, b_ + o.b_, d);
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
  Integer d = joint_radicand(*this, o);
  return raw(a_ - o.a_, b_ - o.b_, d);
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
  Integer d = joint_radicand(*this, o);
  return raw(a_ * o.a_ + b_ * o.b_ * Rational(d), a_ * o.b_ + b_ * o.a_, d);
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
  if (o.a_ == 0 && o.b_ == 0)
    throw DomainError("division_by_zero", "division by zero");
  Integer d = joint_radicand(*this, o);
  if (o.b_ == 0) return raw(a_ / o.a_, b_ / o.a_, d);
  // Multiply by the conjugate; the norm a^2 - b^2 d of a nonzero value is
  // nonzero because d is not a perfect square.
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(d);
  return raw((a_ * o.a_ - b_ * o.b_ * Rational(d)) / norm,
             (b_ * o.a_ - a_ * o.b_) / norm, d);
}

UniPoly QuadExt::minpoly() const {
  if (is_rational()) return UniPoly(std::vector<Rational>{-a_, 1});
  return UniPoly(std::vector<Rational>{a_ * a_ - b_ * b_ * Rational(d_),
                                       -2 * a_, 1});
}

Interval QuadExt::enclosure(long bits) const {
  if (is_rational()) return Interval(a_);
  Rational target =
      Rational(1) / Rational(Integer(1) << static_cast<unsigned long>(bits));
  long k = bits + 4;
  while (true) {
    Interval root = sqrt_enclosure(Rational(d_), k);
    Interval val = Interval(a_) + root * b_;
    if (val.width() <= target) return val;
    k *= 2;
  }
}

Interval QuadExt::isolating() const {
  if (is_rational()) return Interval(a_ - 1, a_ + 1);
  long k = 4;
  while (true) {
    Interval root = sqrt_enclosure(Rational(d_), k);
    Interval val = Interval(a_) + root * b_;
    Interval conj = Interval(a_) - root * b_;
    if (!val.intersects(conj)) return val;
    k *= 2;
  }
}

RealPoint QuadExt::to_real_point() const {
  // Degree-1 minimal polynomials are exact; quadratics with the radicand
  // made nonsquare by construction are irreducible, so skip the search for
  // rational roots that cannot exist.
  return RealPoint::algebraic(minpoly(), isolating(),
                              /*trust_irreducible=*/!is_rational());
}

std::string QuadExt::to_string() const {
  if (is_rational()) return invdec::to_string(a_);
  std::string root = "sqrt(" + invdec::to_string(d_) + ")";
  std::string radical;
  if (b_ == 1)
    radical = root;
  else if (b_ == -1)
    radical = "-" + root;
  else
    radical = invdec::to_string(b_) + "*" + root;
  if (a_ == 0) return radical;
  if (b_ > 0) return invdec::to_string(a_) + "+" + radical;
  return invdec::to_string(a_) + radical;
}

QuadExt operator+(const Rational& q, const QuadExt& x) { return QuadExt(q) + x; }

QuadExt operator*(const Rational& q, const QuadExt& x) { return QuadExt(q) * x; }

QuadExt eval_at(const UniPoly& p, const QuadExt& x) {
  QuadExt acc;
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * x + QuadExt(p.coeff(static_cast<std::size_t>(i)));
  return acc;
}

}  // namespace invdec
