#include "invdec/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "invdec/errors.hpp"

namespace invdec {

MultiPoly::MultiPoly(std::size_t arity, const Rational& c) : arity_(arity) {
  if (sgn(c) != 0) t_.emplace(Exponents(arity, 0u), c);
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw DomainError("variable index out of range");
  Exponents e(arity, 0u);
  e[index] = 1;
  return monomial(arity, std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(std::size_t arity, Exponents e, const Rational& c) {
  if (e.size() != arity) throw DomainError("arity_mismatch", "exponent vector length mismatch");
  MultiPoly p(arity);
  if (sgn(c) != 0) p.t_.emplace(std::move(e), c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (t_.empty()) return true;
  if (t_.size() > 1) return false;
  const Exponents& e = t_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw DomainError("constant_value of a nonconstant polynomial");
  return t_.empty() ? Rational(0) : t_.begin()->second;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : t_) {
    unsigned s = 0;
    for (unsigned k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, e[var]);
  return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

void MultiPoly::check_same_arity(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity_ != b.arity_)
    throw DomainError("arity_mismatch", "polynomial arities differ");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_arity(*this, o);
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_arity(*this, o);
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_same_arity(*this, o);
  MultiPoly r(arity_);
  Exponents e(arity_);
  for (const auto& [ea, ca] : t_)
    for (const auto& [eb, cb] : o.t_) {
      for (std::size_t i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& q) const {
  if (sgn(q) == 0) return MultiPoly(arity_);
  MultiPoly r(*this);
  for (auto& [e, c] : r.t_) c *= q;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly base(*this), acc(arity_, Rational(1));
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return acc;
}

MultiPoly MultiPoly::partial_derivative(std::size_t var) const {
  if (var >= arity_) throw DomainError("derivative variable index out of range");
  MultiPoly r(arity_);
  for (const auto& [e, c] : t_) {
    if (e[var] == 0) continue;
    Exponents d(e);
    d[var] -= 1;
    r.add_term(d, c * Rational(static_cast<long>(e[var])));
  }
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& xs) const {
  if (xs.size() != arity_) throw DomainError("arity_mismatch", "evaluation point arity mismatch");
  Rational acc(0);
  for (const auto& [e, c] : t_) {
    Rational term(c);
    for (std::size_t i = 0; i < arity_; ++i)
      if (e[i]) term *= pow_rational(xs[i], e[i]);
    acc += term;
  }
  return acc;
}

Interval MultiPoly::eval_on(const std::vector<Interval>& box) const {
  if (box.size() != arity_) throw DomainError("arity_mismatch", "evaluation box arity mismatch");
  Interval acc{Rational(0)};
  for (const auto& [e, c] : t_) {
    Interval term{Rational(1)};
    for (std::size_t i = 0; i < arity_; ++i)
      if (e[i]) term = term * invdec::pow(box[i], e[i]);
    acc = acc + term * c;
  }
  return acc;
}

const std::pair<const MultiPoly::Exponents, Rational>& MultiPoly::lex_leading() const {
  if (t_.empty()) throw DomainError("leading term of the zero polynomial");
  return *t_.rbegin();
}

std::string MultiPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // descending lex order
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
      first = false;
    } else {
      out << (sgn(c) < 0 ? '-' : '+');
    }
    bool has_vars = std::any_of(e.begin(), e.end(), [](unsigned k) { return k != 0; });
    bool coeff_shown = !has_vars || a != 1;
    if (coeff_shown) out << invdec::to_string(a);
    bool need_star = coeff_shown;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << '*';
      if (arity_ == 1)
        out << 'x';
      else
        out << 'x' << (i + 1);
      if (e[i] > 1) out << '^' << e[i];
      need_star = true;
    }
  }
  return out.str();
}

Rational content(const MultiPoly& p) {
  if (p.is_zero()) return Rational(0);
  Integer num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational r = Rational(num_gcd) / Rational(den_lcm);
  r.canonicalize();
  return abs(r);
}

MultiPoly primitive_part(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / content(p));
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DomainError("zero_denominator", "polynomial division by zero");
  if (a.arity() != b.arity()) throw DomainError("arity_mismatch", "polynomial arities differ");
  MultiPoly q(a.arity()), r(a);
  const auto& [eb, cb] = b.lex_leading();
  while (!r.is_zero()) {
    const auto& [er, cr] = r.lex_leading();
    MultiPoly::Exponents d(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (er[i] < eb[i]) throw Error("internal", "exact_divide: not divisible");
      d[i] = er[i] - eb[i];
    }
    MultiPoly t = MultiPoly::monomial(a.arity(), std::move(d), cr / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

// lowest variable index with a positive degree in either polynomial, or
// arity when both are constant in every variable
std::size_t first_active_var(const MultiPoly& a, const MultiPoly& b) {
  for (std::size_t v = 0; v < a.arity(); ++v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  return a.arity();
}

// coefficients of p viewed as a polynomial in variable v; each coefficient
// keeps the full arity with exponent 0 in v
std::vector<MultiPoly> coeffs_in(const MultiPoly& p, std::size_t v) {
  std::vector<MultiPoly> out(p.degree_in(v) + 1, MultiPoly(p.arity()));
  for (const auto& [e, c] : p.terms()) {
    MultiPoly::Exponents r(e);
    unsigned k = r[v];
    r[v] = 0;
    out[k] += MultiPoly::monomial(p.arity(), std::move(r), c);
  }
  return out;
}

// gcd of the v-coefficients: the content of p with respect to v
MultiPoly content_in(const MultiPoly& p, std::size_t v) {
  MultiPoly g(p.arity());
  for (const MultiPoly& c : coeffs_in(p, v)) g = gcd(g, c);
  return g;
}

// pseudo-remainder with respect to variable v
MultiPoly prem_in(MultiPoly r, const MultiPoly& b, std::size_t v) {
  unsigned db = b.degree_in(v);
  auto bc = coeffs_in(b, v);
  const MultiPoly& lb = bc[db];
  while (!r.is_zero() && r.degree_in(v) >= db) {
    unsigned dr = r.degree_in(v);
    auto rc = coeffs_in(r, v);
    MultiPoly xk = MultiPoly::monomial(r.arity(), [&] {
      MultiPoly::Exponents e(r.arity(), 0u);
      e[v] = dr - db;
      return e;
    }(), Rational(1));
    r = r * lb - rc[dr] * xk * b;
  }
  return r;
}

// primitive integer coefficients, positive lex-leading coefficient
MultiPoly unit_normal(const MultiPoly& p) {
  if (p.is_zero()) return p;
  MultiPoly q = primitive_part(p);
  if (sgn(q.lex_leading().second) < 0) return -q;
  return q;
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity() != b.arity()) throw DomainError("arity_mismatch", "polynomial arities differ");
  if (a.is_zero()) return unit_normal(b);
  if (b.is_zero()) return unit_normal(a);
  std::size_t v = first_active_var(a, b);
  if (v == a.arity()) return MultiPoly(a.arity(), Rational(1));  // both constant: unit

  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly A = exact_divide(a, ca), B = exact_divide(b, cb);
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  while (!B.is_zero() && B.degree_in(v) > 0) {
    MultiPoly R = prem_in(A, B, v);
    if (!R.is_zero()) {
      MultiPoly cr = content_in(R, v);
      R = exact_divide(R, cr);
    }
    A = B;
    B = R;
  }
  // a nonzero remainder of v-degree 0 means the primitive parts are coprime
  MultiPoly pp = B.is_zero() ? A : MultiPoly(a.arity(), Rational(1));
  return unit_normal(gcd(ca, cb) * pp);
}

}  // namespace invdec
