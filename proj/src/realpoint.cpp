#include "invdec/realpoint.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>

#include "invdec/errors.hpp"

namespace invdec {

namespace {

Rational two_pow_neg(long bits) {
  if (bits < 0) bits = 0;
  Rational r(1);
  mpz_mul_2exp(r.get_den().get_mpz_t(), r.get_den().get_mpz_t(),
               static_cast<unsigned long>(bits));
  return r;
}

// arctan(1/m) scaled by 2^p using only integer floors; the returned error
// bound is in units of 2^-p and covers both the floor losses and the
// alternating-series tail
std::pair<Integer, long> atan_inv_scaled(unsigned long m, unsigned long p) {
  Integer v(1);
  mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), p);
  v /= m;  // floor(2^p / m^(2k+1)) stays exact under the nested floors below
  Integer m2 = Integer(m) * m;
  Integer sum(0);
  long k = 0;
  while (sgn(v) != 0) {
    Integer term = v / (2 * k + 1);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    v /= m2;
    ++k;
  }
  return {sum, k + 1};
}

}  // namespace

Interval pi_enclosure(long bits) {
  if (bits < 1) bits = 1;
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239), computed in fixed point with
  // 32 guard bits; the error budget E stays far below 2^31 for any cap this
  // code will ever see
  unsigned long p = static_cast<unsigned long>(bits) + 32;
  auto [s5, e5] = atan_inv_scaled(5, p);
  auto [s239, e239] = atan_inv_scaled(239, p);
  Integer S = 16 * s5 - 4 * s239;
  Integer E(16 * e5 + 4 * e239 + 2);
  Rational scale(1);
  mpz_mul_2exp(scale.get_den().get_mpz_t(), scale.get_den().get_mpz_t(), p);
  Rational lo = Rational(S - E) * scale;
  Rational hi = Rational(S + E) * scale;
  lo.canonicalize();
  hi.canonicalize();
  return Interval(lo, hi);
}

Interval e_enclosure(long bits) {
  if (bits < 1) bits = 1;
  unsigned long p = static_cast<unsigned long>(bits) + 32;
  // e = sum 1/k!; t tracks floor(2^p / k!) via nested floors, each of which
  // loses under 2 ulps after propagation, and the tail after t reaches zero
  // is under 4 ulps
  Integer t(1);
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), p);
  Integer sum(0);
  unsigned long k = 0;
  while (sgn(t) != 0) {
    sum += t;
    ++k;
    t /= k;
  }
  Integer E(2 * static_cast<long>(k) + 4);
  Rational scale(1);
  mpz_mul_2exp(scale.get_den().get_mpz_t(), scale.get_den().get_mpz_t(), p);
  Rational lo = Rational(sum) * scale;
  Rational hi = Rational(sum + E) * scale;
  lo.canonicalize();
  hi.canonicalize();
  return Interval(lo, hi);
}

struct RealPoint::State {
  enum class Kind { pi, e, stream, algebraic } kind;
  std::string name;

  // stream
  std::function<Interval(long)> enclosure;

  // algebraic
  UniPoly minpoly;
  Interval original{Rational(0)};
  std::optional<Rational> exact;

  mutable std::mutex mu;
  mutable std::optional<Interval> cache;
  mutable long cache_bits = -1;
};

RealPoint RealPoint::pi() {
  auto s = std::make_shared<State>();
  s->kind = State::Kind::pi;
  s->name = "pi";
  return RealPoint(std::move(s));
}

RealPoint RealPoint::e() {
  auto s = std::make_shared<State>();
  s->kind = State::Kind::e;
  s->name = "e";
  return RealPoint(std::move(s));
}

namespace {

// divisors of |n|; the caller has bounded |n| already
std::vector<Integer> small_divisors(const Integer& n) {
  Integer a = abs(n);
  std::vector<Integer> out;
  for (Integer d(1); d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      Integer q = a / d;
      if (q != d) out.push_back(q);
    }
  }
  return out;
}

void verify_irreducibility_effort(const UniPoly& m, bool trusted) {
  if (m.degree() < 2) return;
  UniPoly P = primitive_part(m);
  const Integer& c0 = P.coeff(0).get_num();
  if (sgn(c0) == 0)
    throw DomainError("reducible minimal polynomial: x is a factor");
  const Integer& lc = P.leading().get_num();
  const Integer effort(1000000);
  if (abs(c0) > effort || abs(lc) > effort) {
    if (trusted) return;
    throw DomainError(
        "irreducibility scan exceeds the effort bound; pass trust_irreducible "
        "for a known-irreducible polynomial");
  }
  for (const Integer& p : small_divisors(c0))
    for (const Integer& q : small_divisors(lc)) {
      Rational cand = Rational(p) / Rational(q);
      cand.canonicalize();
      if (sgn(P.eval(cand)) == 0 || sgn(P.eval(-cand)) == 0)
        throw DomainError("reducible minimal polynomial: rational root " +
                          to_string(cand));
    }
}

}  // namespace

RealPoint RealPoint::algebraic(const UniPoly& minpoly, const Interval& isolating,
                               bool trust_irreducible) {
  if (minpoly.is_zero() || minpoly.degree() < 1)
    throw DomainError("minimal polynomial must have degree at least 1");
  if (!is_squarefree(minpoly))
    throw DomainError("minimal polynomial is not squarefree");
  if (!(isolating.lo < isolating.hi))
    throw DomainError("isolating interval must have positive width");
  Sign slo = sign_of(minpoly.eval(isolating.lo));
  Sign shi = sign_of(minpoly.eval(isolating.hi));
  if (slo == Sign::zero || shi == Sign::zero)
    throw DomainError("isolating interval endpoint is a root");
  if (slo == shi)
    throw DomainError("no sign change across the isolating interval");
  if (count_roots_open(minpoly, isolating.lo, isolating.hi) != 1)
    throw DomainError("isolating interval does not contain exactly one root");
  verify_irreducibility_effort(minpoly, trust_irreducible);

  auto s = std::make_shared<State>();
  s->kind = State::Kind::algebraic;
  s->minpoly = minpoly;
  s->original = isolating;
  s->name = "algebraic(" + minpoly.to_string() + ")";
  if (minpoly.degree() == 1) s->exact = -minpoly.coeff(0) / minpoly.coeff(1);
  return RealPoint(std::move(s));
}

RealPoint RealPoint::digit_stream(std::string name, std::function<Interval(long)> enclosure) {
  if (!enclosure) throw DomainError("digit stream requires an enclosure callback");
  auto s = std::make_shared<State>();
  s->kind = State::Kind::stream;
  s->name = std::move(name);
  s->enclosure = std::move(enclosure);
  return RealPoint(std::move(s));
}

RealPoint RealPoint::from_digit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("io_error", "cannot open digit file: " + path);
  std::string header, literal;
  if (!std::getline(in, header) || !std::getline(in, literal))
    throw DomainError("io_error", "digit file is truncated: " + path);
  std::istringstream hs(header);
  std::string tag;
  long declared = -1;
  hs >> tag >> declared;
  if (tag != "decimal" || declared < 1)
    throw DomainError("io_error", "digit file header must be 'decimal <count>': " + path);

  while (!literal.empty() && std::isspace(static_cast<unsigned char>(literal.back())))
    literal.pop_back();
  bool negative = false;
  std::size_t i = 0;
  if (i < literal.size() && (literal[i] == '-' || literal[i] == '+')) {
    negative = literal[i] == '-';
    ++i;
  }
  std::size_t int_start = i;
  while (i < literal.size() && std::isdigit(static_cast<unsigned char>(literal[i]))) ++i;
  if (i == int_start || i >= literal.size() || literal[i] != '.')
    throw DomainError("io_error", "digit file literal must look like 12.345: " + path);
  Integer int_part(literal.substr(int_start, i - int_start));
  ++i;
  std::string frac = literal.substr(i);
  if (frac.empty() ||
      !std::all_of(frac.begin(), frac.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw DomainError("io_error", "digit file fraction digits are malformed: " + path);
  long available = std::min<long>(declared, static_cast<long>(frac.size()));
  std::string name = "digits:" + path;

  auto fn = [int_part, frac, available, negative, name](long bits) -> Interval {
    if (bits < 1) bits = 1;
    // k decimal digits give width 10^-k <= 2^-bits once k >= bits*log10(2);
    // 30103/100000 exceeds log10(2), so the ceiling below is always enough
    long k = (bits * 30103 + 99999) / 100000;
    if (k < 1) k = 1;
    if (k > available)
      throw PrecisionError(name + " exhausted: need " + std::to_string(k) +
                           " digits, file provides " + std::to_string(available));
    Integer f(frac.substr(0, static_cast<std::size_t>(k)));
    Integer p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(k));
    Rational mag = Rational(int_part) + Rational(f) / Rational(p10);
    Rational step = 1 / Rational(p10);
    // digits are a truncation: value in [mag, mag + step] for the magnitude
    if (!negative) return Interval(mag, mag + step);
    return Interval(-mag - step, -mag);
  };
  return digit_stream(std::move(name), std::move(fn));
}

Interval RealPoint::refine(long bits, bool use_cache) const {
  State& s = *s_;
  if (bits < 1) bits = 1;
  Rational target = two_pow_neg(bits);

  if (s.kind == State::Kind::algebraic) {
    if (s.exact) return Interval(*s.exact);
    std::unique_lock<std::mutex> lock(s.mu);
    Interval cur = (use_cache && s.cache) ? *s.cache : s.original;
    if (!use_cache) lock.unlock();
    if (cur.width() > target) {
      Sign slo = sign_of(s.minpoly.eval(cur.lo));
      while (cur.width() > target) {
        Rational mid = cur.mid();
        Sign sm = sign_of(s.minpoly.eval(mid));
        if (sm == Sign::zero) {
          // can only happen when an effort-bounded construction missed a
          // rational root; the value is then exactly mid
          cur = Interval(mid);
          break;
        }
        cur = (sm == slo) ? Interval(mid, cur.hi) : Interval(cur.lo, mid);
      }
    }
    if (use_cache) {
      s.cache = cur;
      s.cache_bits = std::max(s.cache_bits, bits);
    }
    return cur;
  }

  if (use_cache) {
    std::lock_guard<std::mutex> lock(s.mu);
    if (s.cache && s.cache_bits >= bits) return *s.cache;
  }
  Interval iv = s.kind == State::Kind::pi    ? pi_enclosure(bits)
                : s.kind == State::Kind::e   ? e_enclosure(bits)
                                             : s.enclosure(bits);
  if (iv.width() > target)
    throw Error("internal", "enclosure callback returned an interval wider than 2^-bits");
  if (use_cache) {
    std::lock_guard<std::mutex> lock(s.mu);
    if (!s.cache || s.cache_bits < bits) {
      s.cache = iv;
      s.cache_bits = bits;
    }
  }
  return iv;
}

bool RealPoint::is_algebraic() const { return s_->kind == State::Kind::algebraic; }

const UniPoly* RealPoint::minpoly() const {
  return is_algebraic() ? &s_->minpoly : nullptr;
}

const Interval* RealPoint::isolating() const {
  return is_algebraic() ? &s_->original : nullptr;
}

std::optional<Rational> RealPoint::exact_rational() const { return s_->exact; }

const std::string& RealPoint::name() const { return s_->name; }

namespace {

SignResult interval_sign(const UniPoly& num, const UniPoly& den, const RealPoint& pt,
                         const SignOptions& opt) {
  long bits = std::max(1L, opt.start_bits);
  for (;;) {
    Interval iv = pt.refine(bits, opt.use_cache);
    auto sn = eval_on(num, iv).determined_sign();
    auto sd = eval_on(den, iv).determined_sign();
    if (sn && sd && *sn != Sign::zero && *sd != Sign::zero) return {*sn * *sd, bits};
    if (bits >= opt.max_bits)
      throw PrecisionError("sign of " + num.to_string() + " at " + pt.name() +
                           " unresolved at " + std::to_string(opt.max_bits) + " bits");
    bits = std::min(opt.max_bits, bits * 2);
  }
}

}  // namespace

SignResult sign_at_traced(const RationalFunction& r, const RealPoint& pt,
                          const SignOptions& opt) {
  if (pt.is_algebraic()) {
    const UniPoly& m = *pt.minpoly();
    if (divides(m, r.den()))
      throw DomainError("zero_denominator", "denominator vanishes at the algebraic point");
    if (r.num().is_zero() || divides(m, r.num())) return {Sign::zero, 0};
    if (auto v = pt.exact_rational()) return {sign_of(r.eval(*v)), 0};
  } else if (r.num().is_zero()) {
    return {Sign::zero, 0};
  }
  return interval_sign(r.num(), r.den(), pt, opt);
}

Sign sign_at(const RationalFunction& r, const RealPoint& pt, const SignOptions& opt) {
  return sign_at_traced(r, pt, opt).sign;
}

Sign sign_at(const UniPoly& p, const RealPoint& pt, const SignOptions& opt) {
  return sign_at_traced(RationalFunction(p), pt, opt).sign;
}

SignResult sign_at_tuple_traced(const MultiRationalFunction& r, const PointTuple& tup,
                                const SignOptions& opt) {
  if (tup.points.empty()) throw DomainError("empty point tuple");
  if (r.arity() != tup.points.size())
    throw DomainError("arity_mismatch", "function arity differs from tuple length");
  if (r.arity() == 1) return sign_at_traced(r.to_univariate(), tup.points[0], opt);

  bool any_transcendental = std::any_of(tup.points.begin(), tup.points.end(),
                                        [](const RealPoint& p) { return !p.is_algebraic(); });
  if (any_transcendental && !tup.independence_promise)
    throw DomainError(
        "multivariate sign query over transcendental coordinates requires the "
        "independence promise");
  if (r.num().is_zero()) return {Sign::zero, 0};

  long bits = std::max(1L, opt.start_bits);
  std::vector<Interval> box;
  box.reserve(tup.points.size());
  for (;;) {
    box.clear();
    for (const RealPoint& p : tup.points) box.push_back(p.refine(bits, opt.use_cache));
    auto sn = r.num().eval_on(box).determined_sign();
    auto sd = r.den().eval_on(box).determined_sign();
    if (sn && sd && *sn != Sign::zero && *sd != Sign::zero) return {*sn * *sd, bits};
    if (bits >= opt.max_bits)
      throw PrecisionError(
          "multivariate sign unresolved at " + std::to_string(opt.max_bits) +
          " bits; the independence promise may be false or the cap too low");
    bits = std::min(opt.max_bits, bits * 2);
  }
}

Sign sign_at_tuple(const MultiRationalFunction& r, const PointTuple& tup,
                   const SignOptions& opt) {
  return sign_at_tuple_traced(r, tup, opt).sign;
}

}  // namespace invdec
