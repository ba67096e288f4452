#include "invdec/unipoly.hpp"

#include <sstream>

#include "invdec/errors.hpp"

namespace invdec {

UniPoly::UniPoly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UniPoly UniPoly::variable() { return monomial(Rational(1), 1); }

UniPoly UniPoly::from_coeffs(std::initializer_list<long> low_to_high) {
  std::vector<Rational> v;
  v.reserve(low_to_high.size());
  for (long c : low_to_high) v.emplace_back(c);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
  UniPoly p;
  if (sgn(c) != 0) {
    p.c_.assign(k + 1, Rational(0));
    p.c_[k] = c;
  }
  return p;
}

const Rational& UniPoly::coeff(std::size_t i) const {
  static const Rational zero(0);
  return i < c_.size() ? c_[i] : zero;
}

const Rational& UniPoly::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  UniPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

UniPoly UniPoly::scaled(const Rational& q) const {
  if (sgn(q) == 0) return {};
  UniPoly r(*this);
  for (auto& c : r.c_) c *= q;
  return r;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly base(*this), acc(Rational(1));
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  UniPoly r;
  r.c_.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Rational(static_cast<long>(i)));
  r.trim();
  return r;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
      first = false;
    } else {
      out << (sgn(c) < 0 ? '-' : '+');
    }
    if (i == 0) {
      out << invdec::to_string(a);
    } else {
      if (a != 1) out << invdec::to_string(a) << '*';
      out << var;
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

Interval eval_on(const UniPoly& p, const Interval& x) {
  if (p.is_zero()) return Interval(Rational(0));
  const auto& c = p.coeffs();
  Interval acc{Interval(c.back())};
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
  return acc;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("zero_denominator", "polynomial division by zero");
  UniPoly q, r(a);
  int db = b.degree();
  const Rational& lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    Rational c = r.leading() / lb;
    std::size_t k = static_cast<std::size_t>(r.degree() - db);
    UniPoly t = UniPoly::monomial(c, k);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

UniPoly exact_divide(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("internal", "exact_divide remainder is nonzero");
  return q;
}

bool divides(const UniPoly& d, const UniPoly& a) {
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).second.is_zero();
}

Rational content(const UniPoly& p) {
  if (p.is_zero()) return Rational(0);
  Integer num_gcd(0), den_lcm(1);
  for (const Rational& c : p.coeffs()) {
    if (sgn(c) == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational r = Rational(num_gcd) / Rational(den_lcm);
  r.canonicalize();
  return abs(r);
}

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return {};
  return p.scaled(1 / content(p));
}

namespace {

// pseudo-remainder of integer-coefficient polynomials: r is repeatedly
// replaced by r*lc(b) - lc(r)*x^k*b, which stays integral
UniPoly prem(UniPoly r, const UniPoly& b) {
  const Rational& lb = b.leading();
  int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    UniPoly t = UniPoly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - db)) * b;
    r = r.scaled(lb) - t;
  }
  return r;
}

UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return {};
  return p.scaled(1 / p.leading());
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  UniPoly A = primitive_part(a), B = primitive_part(b);
  while (!B.is_zero()) {
    UniPoly R = prem(A, B);
    if (!R.is_zero()) R = primitive_part(R);
    A = B;
    B = R;
  }
  return monic(A);
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("squarefreeness of the zero polynomial");
  if (p.is_constant()) return true;
  return gcd(p, p.derivative()).is_constant();
}

long count_roots_open(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DomainError("root counting for the zero polynomial");
  if (!(lo < hi)) return 0;
  if (sgn(p.eval(lo)) == 0 || sgn(p.eval(hi)) == 0)
    throw DomainError("root counting interval has a root endpoint");
  if (p.is_constant()) return 0;

  // Sturm chain of the squarefree part; every scaling below is by a positive
  // rational so the sign pattern is untouched.
  UniPoly f0 = exact_divide(p, gcd(p, p.derivative()));
  std::vector<UniPoly> chain{primitive_part(f0)};
  if (!f0.is_constant()) {
    chain.push_back(primitive_part(f0.derivative()));
    while (!chain.back().is_constant()) {
      const UniPoly& s = chain[chain.size() - 2];
      const UniPoly& t = chain.back();
      UniPoly r = divmod(s, t).second;
      if (r.is_zero()) break;  // cannot happen for a squarefree f0, kept defensive
      chain.push_back(primitive_part(-r));
    }
  }

  auto variations = [&chain](const Rational& x) {
    long v = 0;
    Sign prev = Sign::zero;
    for (const UniPoly& f : chain) {
      Sign s = sign_of(f.eval(x));
      if (s == Sign::zero) continue;
      if (prev != Sign::zero && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  return variations(lo) - variations(hi);
}

}  // namespace invdec
