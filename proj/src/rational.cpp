#include "invdec/rational.hpp"

#include <cctype>

#include "invdec/errors.hpp"

namespace invdec {

Rational parse_rational(const std::string& text) {
  // shape: -?digits(/digits)?  with no spaces and no empty parts
  std::size_t i = 0;
  auto bad = [&]() -> DomainError {
    return DomainError("syntax_error", "malformed rational literal: '" + text + "'");
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) throw bad();
  if (i < text.size()) {
    if (text[i] != '/') throw bad();
    ++i;
    std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != text.size()) throw bad();
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) throw bad();
  if (sgn(q.get_den()) == 0)
    throw DomainError("zero_denominator", "rational literal with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& n) { return n.get_str(); }

Rational pow_rational(const Rational& base, unsigned long e) {
  if (e == 0) return Rational(1);
  Rational r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
  // base was canonical, so num^e / den^e already is
  return r;
}

Integer floor_int(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return r;
}

Integer ceil_int(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return r;
}

namespace {

// simplest rational in open (lo, hi) with 0 <= lo < hi
Rational simplest_nonneg(const Rational& lo, const Rational& hi) {
  Rational fl(floor_int(lo));
  if (fl + 1 < hi) return fl + 1;  // fl+1 > lo holds for any lo
  // no integer strictly inside; recurse on the reciprocal fractional parts
  if (lo == fl) {
    // lower bound is an integer: x = fl + 1/y with y ranging over (1/(hi-fl), inf)
    Rational y(floor_int(1 / (hi - fl)) + 1);
    return fl + 1 / y;
  }
  Rational y = simplest_nonneg(1 / (hi - fl), 1 / (lo - fl));
  return fl + 1 / y;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw DomainError("empty interval for simplest_between");
  if (lo < 0 && 0 < hi) return Rational(0);
  if (lo >= 0) return simplest_nonneg(lo, hi);
  return -simplest_nonneg(-hi, -lo);
}

bool is_rational_square(const Rational& q, Rational* root) {
  if (sgn(q) < 0) return false;
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return false;
  if (root) {
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    *root = Rational(rn) / Rational(rd);
  }
  return true;
}

}  // namespace invdec
