#include "invdec/hyperplane.hpp"

#include <algorithm>
#include <utility>

#include "invdec/errors.hpp"

namespace invdec {

namespace {

QuadExt pow_qe(const QuadExt& x, unsigned n) {
  QuadExt acc{Rational(1)};
  for (unsigned k = 0; k < n; ++k) acc = acc * x;
  return acc;
}

using Complex = std::pair<QuadExt, QuadExt>;  // re + im*i

Complex complex_mul(const Complex& x, const Complex& y) {
  return {x.first * y.first - x.second * y.second,
          x.first * y.second + x.second * y.first};
}

Complex complex_pow(const Complex& z, unsigned n) {
  Complex acc{QuadExt(Rational(1)), QuadExt()};
  for (unsigned k = 0; k < n; ++k) acc = complex_mul(acc, z);
  return acc;
}

// Order two quadratic irrationals, falling back to enclosure refinement when
// they live in different fields and cannot be subtracted.
bool quad_less(const QuadExt& x, const QuadExt& y) {
  if (x.is_rational() || y.is_rational() || x.d() == y.d())
    return (x - y).sign() == Sign::minus;
  for (long bits = 32;; bits *= 2) {
    if (bits > (1L << 20))
      throw PrecisionError("cannot order two quadratic irrationals");
    Interval ix = x.enclosure(bits);
    Interval iy = y.enclosure(bits);
    if (ix.hi < iy.lo) return true;
    if (iy.hi < ix.lo) return false;
  }
}

CertifiedInequality alpha_cert(std::string label, UniPoly q, Sign required,
                               const RealPoint& alpha, const SignOptions& opt) {
  SignResult r = sign_at_traced(RationalFunction(q), alpha, opt);
  if (r.sign != required)
    throw Error("internal", "constructed inequality failed verification: " + label);
  CertifiedInequality ci;
  ci.label = std::move(label);
  ci.kind = CertifiedInequality::Kind::at_alpha;
  ci.poly = std::move(q);
  ci.required = required;
  ci.bits_used = r.bits_used;
  return ci;
}

CertifiedInequality exact_cert(std::string label, UniPoly q,
                               const Rational& where, Sign required) {
  if (sign_of(q.eval(where)) != required)
    throw Error("internal", "constructed inequality failed verification: " + label);
  CertifiedInequality ci;
  ci.label = std::move(label);
  ci.kind = CertifiedInequality::Kind::at_exact;
  ci.poly = std::move(q);
  ci.where = where;
  ci.required = required;
  return ci;
}

CertifiedInequality im_cert(std::string label, const Rational& re,
                            const Rational& im, unsigned power, Sign required) {
  Complex z = complex_pow({QuadExt(re), QuadExt(im)}, power);
  if (z.second.sign() != required)
    throw Error("internal", "constructed inequality failed verification: " + label);
  CertifiedInequality ci;
  ci.label = std::move(label);
  ci.kind = CertifiedInequality::Kind::im_power;
  ci.re = re;
  ci.im = im;
  ci.power = power;
  ci.required = required;
  return ci;
}

}  // namespace

const char* to_cstring(Family f) {
  switch (f) {
    case Family::two_point: return "two-point";
    case Family::derivation: return "derivation";
    case Family::complex_pair: return "complex-pair";
  }
  return "?";
}

HyperplaneKind HyperplaneKind::two_point(const QuadExt& beta,
                                         const QuadExt& gamma) {
  if (beta == gamma)
    throw DomainError("the two evaluation points must be distinct");
  if (quad_less(gamma, beta))
    return HyperplaneKind(Family::two_point, {gamma, beta}, std::nullopt);
  return HyperplaneKind(Family::two_point, {beta, gamma}, std::nullopt);
}

HyperplaneKind HyperplaneKind::derivation(const QuadExt& delta) {
  return HyperplaneKind(Family::derivation, {delta}, std::nullopt);
}

HyperplaneKind HyperplaneKind::derivation(const RealPoint& delta) {
  return HyperplaneKind(Family::derivation, {}, delta);
}

HyperplaneKind HyperplaneKind::complex_pair(const QuadExt& u, const QuadExt& v) {
  Sign sv = v.sign();
  if (sv == Sign::zero)
    throw DomainError("the complex point must not be real");
  return HyperplaneKind(Family::complex_pair,
                        {u, sv == Sign::minus ? -v : v}, std::nullopt);
}

const QuadExt& HyperplaneKind::beta() const {
  if (family_ != Family::two_point) throw Error("internal", "not a two-point kind");
  return params_[0];
}

const QuadExt& HyperplaneKind::gamma() const {
  if (family_ != Family::two_point) throw Error("internal", "not a two-point kind");
  return params_[1];
}

bool HyperplaneKind::has_exact_delta() const {
  return family_ == Family::derivation && !point_.has_value();
}

const QuadExt& HyperplaneKind::delta() const {
  if (!has_exact_delta()) throw Error("internal", "no exact critical point");
  return params_[0];
}

const RealPoint& HyperplaneKind::delta_point() const {
  if (family_ != Family::derivation || !point_.has_value())
    throw Error("internal", "no computable-real critical point");
  return *point_;
}

const QuadExt& HyperplaneKind::u() const {
  if (family_ != Family::complex_pair) throw Error("internal", "not a complex-pair kind");
  return params_[0];
}

const QuadExt& HyperplaneKind::v() const {
  if (family_ != Family::complex_pair) throw Error("internal", "not a complex-pair kind");
  return params_[1];
}

std::string HyperplaneKind::to_string() const {
  switch (family_) {
    case Family::two_point:
      return "two-point(" + params_[0].to_string() + ", " +
             params_[1].to_string() + ")";
    case Family::derivation:
      return "derivation(" +
             (point_ ? point_->name() : params_[0].to_string()) + ")";
    case Family::complex_pair:
      return "complex-pair(" + params_[0].to_string() + ", " +
             params_[1].to_string() + ")";
  }
  return "?";
}

QuadExt lambda_closed_form(const HyperplaneKind& kind, unsigned i) {
  if (i == 0) return QuadExt();
  if (i == 1) return QuadExt(Rational(1));
  switch (kind.family()) {
    case Family::two_point:
      return (pow_qe(kind.beta(), i) - pow_qe(kind.gamma(), i)) /
             (kind.beta() - kind.gamma());
    case Family::derivation:
      if (!kind.has_exact_delta())
        throw DomainError(
            "no closed form: the critical point carries no exact value");
      return Rational(i) * pow_qe(kind.delta(), i - 1);
    case Family::complex_pair: {
      Complex z = complex_pow({kind.u(), kind.v()}, i);
      return z.second / kind.v();
    }
  }
  throw Error("internal", "unhandled family");
}

LambdaSeq lambda_prefix(const HyperplaneKind& kind, unsigned K) {
  LambdaSeq out;
  out.reserve(K + 1);
  for (unsigned i = 0; i <= K; ++i) out.push_back(lambda_closed_form(kind, i));
  return out;
}

LambdaSeq lambda_recursion_extend(const QuadExt& l1, const QuadExt& l2,
                                  const QuadExt& l3, unsigned K) {
  if (!(l1 == QuadExt(Rational(1))))
    throw DomainError("the sequence must be normalized with second entry 1");
  LambdaSeq out;
  out.reserve(K + 1);
  out.push_back(QuadExt());
  if (K >= 1) out.push_back(l1);
  if (K >= 2) out.push_back(l2);
  if (K >= 3) out.push_back(l3);
  QuadExt carry = l3 - l2 * l2;
  for (unsigned i = 4; i <= K; ++i)
    out.push_back(l2 * out[i - 1] + carry * out[i - 2]);
  return out;
}

HyperplaneKind classify_params(const Rational& l2, const Rational& l3) {
  Rational disc = Rational(3) * l2 * l2 - Rational(4) * l3;
  Sign s = sign_of(disc);
  if (s == Sign::minus) {
    // roots of t^2 - l2*t + (l2^2 - l3)
    QuadExt gap = QuadExt::sqrt_of(Rational(-disc));
    Rational half(1, 2);
    return HyperplaneKind::two_point(half * (QuadExt(l2) - gap),
                                     half * (QuadExt(l2) + gap));
  }
  if (s == Sign::zero) return HyperplaneKind::derivation(QuadExt(Rational(l2 / 2)));
  return HyperplaneKind::complex_pair(QuadExt(Rational(l2 / 2)),
                                      QuadExt::sqrt_of(Rational(disc / 4)));
}

bool membership(const UniPoly& p, const HyperplaneKind& kind) {
  switch (kind.family()) {
    case Family::two_point:
      return eval_at(p, kind.beta()) == eval_at(p, kind.gamma());
    case Family::derivation: {
      UniPoly dp = p.derivative();
      if (kind.has_exact_delta()) return eval_at(dp, kind.delta()) == QuadExt();
      // exact through the sign oracle: for a transcendental point this is
      // the identically-zero test, for an algebraic one a divisibility test
      return sign_at(dp, kind.delta_point()) == Sign::zero;
    }
    case Family::complex_pair: {
      Complex z{kind.u(), kind.v()};
      Complex acc{QuadExt(), QuadExt()};
      const auto& cs = p.coeffs();
      for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = complex_mul(acc, z);
        acc.first = acc.first + QuadExt(*it);
      }
      return acc.second == QuadExt();
    }
  }
  throw Error("internal", "unhandled family");
}

Report check_product_closure(
    const HyperplaneKind& kind,
    const std::vector<std::pair<UniPoly, UniPoly>>& samples) {
  Report rep;
  rep.suite = std::string("product-closure/") + to_cstring(kind.family());
  for (const auto& [p, q] : samples) {
    if (!membership(p, kind) || !membership(q, kind)) continue;
    ++rep.cases;
    if (!membership(p * q, kind))
      rep.violations.push_back({p.to_string() + " ; " + q.to_string(),
                                "product in the hyperplane", "product escaped"});
  }
  return rep;
}

Counterexample counterexample_twopoint(const RealPoint& alpha,
                                       const std::optional<Rational>& b,
                                       const std::optional<Rational>& c,
                                       const SignOptions& opt) {
  if (!b.has_value())
    throw DomainError("the negative-target point must be a rational value");
  if (c.has_value() && *c == *b)
    throw DomainError("the two evaluation points must be distinct");
  UniPoly x = UniPoly::variable();
  UniPoly from_b = x - UniPoly(*b);
  if (sign_at(from_b, alpha, opt) == Sign::zero)
    throw DomainError("the negative-target point must differ from the base point");

  Counterexample cex;
  if (!c.has_value()) {
    // second evaluation point = the base point itself: p = (x-b)^2 - t with
    // t squeezed between half of (alpha-b)^2 and all of it
    UniPoly sq = from_b * from_b;
    Rational t;
    for (long bits = opt.start_bits;; bits *= 2) {
      if (bits > opt.max_bits)
        throw PrecisionError("cannot separate the squared gap from half of itself");
      Interval w = eval_on(sq, alpha.refine(bits, opt.use_cache));
      Rational lo = w.hi / 2;
      if (sign_of(w.lo) == Sign::plus && lo < w.lo) {
        t = simplest_between(lo, w.lo);
        break;
      }
    }
    UniPoly p = sq - UniPoly(t);
    Rational at_b = p.eval(*b);  // equals -t
    cex.witnesses = {p};
    cex.certificates.push_back(alpha_cert("p(alpha)", p, Sign::plus, alpha, opt));
    cex.certificates.push_back(exact_cert("p(b)", p, *b, Sign::minus));
    cex.certificates.push_back(
        alpha_cert("p(alpha)+p(b)", p + UniPoly(at_b), Sign::minus, alpha, opt));
    cex.certificates.push_back(alpha_cert(
        "p(b)^2-p(alpha)^2", UniPoly(Rational(at_b * at_b)) - p * p,
        Sign::plus, alpha, opt));
    return cex;
  }

  // both points rational: interpolate p0(b) = -3, p0(c) = 1, then add a
  // correction vanishing at both until the value at alpha is positive
  UniPoly from_c = x - UniPoly(*c);
  Rational slope = Rational(4) / Rational(*c - *b);
  UniPoly p0 = UniPoly(Rational(-3)) + from_b.scaled(slope);
  UniPoly q = from_b * from_c;
  Sign sigma = sign_at(q, alpha, opt);
  UniPoly p;
  if (sigma == Sign::zero) {
    // alpha coincides with c (coincidence with b was rejected above); the
    // correction vanishes there and p0(alpha) = 1 already
    p = p0;
  } else {
    Integer m;
    for (long bits = opt.start_bits;; bits *= 2) {
      if (bits > opt.max_bits)
        throw PrecisionError("cannot bound the correction multiplier");
      Interval ia = alpha.refine(bits, opt.use_cache);
      Interval qe = eval_on(q, ia);
      Interval pe = eval_on(p0, ia);
      Rational low = sigma == Sign::plus ? qe.lo : -qe.hi;
      if (sign_of(low) != Sign::plus) continue;
      Rational need = -pe.lo;
      if (sign_of(need) == Sign::plus) {
        Integer steps = ceil_int(Rational(need / low));
        m = steps + 1;
      } else {
        m = 1;
      }
      break;
    }
    Rational mult = sigma == Sign::plus ? Rational(m) : Rational(-m);
    p = p0 + q.scaled(mult);
  }

  Rational at_c = p.eval(*c);  // equals 1
  cex.witnesses = {p};
  cex.certificates.push_back(alpha_cert("p(alpha)", p, Sign::plus, alpha, opt));
  cex.certificates.push_back(exact_cert("p(c)", p, *c, Sign::plus));
  cex.certificates.push_back(
      exact_cert("p(b)+p(c)", p + UniPoly(at_c), *b, Sign::minus));
  cex.certificates.push_back(exact_cert(
      "p(b)^2-p(c)^2", p * p - UniPoly(Rational(at_c * at_c)), *b, Sign::plus));
  return cex;
}

Counterexample counterexample_complex(const RealPoint& alpha, const Rational& u,
                                      const Rational& v_in,
                                      const std::optional<Rational>& b_hint,
                                      const SignOptions& opt) {
  if (sign_of(v_in) == Sign::zero)
    throw DomainError("the complex point must not be real");
  Rational v = sign_of(v_in) == Sign::minus ? Rational(-v_in) : v_in;

  std::vector<Rational> shifts;
  if (b_hint) shifts.push_back(*b_hint);
  for (const auto& [num, den] :
       std::initializer_list<std::pair<long, long>>{
           {1, 1}, {0, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2}, {-1, 2},
           {3, 1}, {-3, 1}, {4, 1}, {-4, 1}, {5, 1}, {-5, 1}, {6, 1},
           {-6, 1}, {7, 1}})
    shifts.emplace_back(num, den);

  UniPoly x = UniPoly::variable();
  // caps the power search per shift; the hardest admissible geometry is a
  // point far right of the origin with a tiny imaginary part, where the
  // first sign flip lands near pi/atan(v / (u + b))
  constexpr unsigned kPowerCap = 256;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    const Rational& bb = shifts[i];
    UniPoly p = x + UniPoly(bb);
    if (sign_at(p, alpha, opt) != Sign::plus) {
      if (b_hint && i == 0)
        throw DomainError("the hinted shift does not keep the base point positive");
      continue;
    }
    Rational re = u + bb;
    Complex z{QuadExt(re), QuadExt(v)};
    Complex acc = z;
    for (unsigned n = 1; n <= kPowerCap; ++n) {
      if (n > 1) acc = complex_mul(acc, z);
      if (acc.second.sign() != Sign::minus) continue;
      Counterexample cex;
      cex.witnesses = {p};
      cex.power = n;
      cex.certificates.push_back(alpha_cert("p(alpha)", p, Sign::plus, alpha, opt));
      cex.certificates.push_back(im_cert("Im p(z)", re, v, 1, Sign::plus));
      cex.certificates.push_back(im_cert("Im p(z)^n", re, v, n, Sign::minus));
      return cex;
    }
  }
  throw Error("retry_exhausted",
              "no power with negative imaginary part within the search budget");
}

Counterexample counterexample_derivation(const RealPoint& alpha,
                                         const Rational& delta,
                                         const SignOptions& opt) {
  UniPoly x = UniPoly::variable();
  UniPoly shifted = x - UniPoly(delta);
  if (sign_at(shifted, alpha, opt) == Sign::zero)
    throw DomainError("the critical point must differ from the base point");
  UniPoly sq = shifted * shifted;
  UniPoly one{Rational(1)};

  UniPoly p_plus, p_minus;
  for (long lead = 1;; ++lead) {
    if (lead > 1000000)
      throw Error("internal", "no quadratic coefficient made both values positive");
    p_plus = sq.scaled(Rational(lead)) + shifted - one;
    p_minus = sq.scaled(Rational(lead)) - shifted - one;
    if (sign_at(p_plus, alpha, opt) == Sign::plus &&
        sign_at(p_minus, alpha, opt) == Sign::plus)
      break;
  }

  Counterexample cex;
  cex.witnesses = {p_plus, p_minus};
  cex.certificates.push_back(alpha_cert("p+(alpha)", p_plus, Sign::plus, alpha, opt));
  cex.certificates.push_back(alpha_cert("p-(alpha)", p_minus, Sign::plus, alpha, opt));
  cex.certificates.push_back(exact_cert("p+(delta)", p_plus, delta, Sign::minus));
  cex.certificates.push_back(exact_cert("p-(delta)", p_minus, delta, Sign::minus));
  cex.certificates.push_back(
      exact_cert("p+'(delta)", p_plus.derivative(), delta, Sign::plus));
  cex.certificates.push_back(
      exact_cert("p-'(delta)", p_minus.derivative(), delta, Sign::minus));
  cex.certificates.push_back(exact_cert(
      "(p+^2)'(delta)", (p_plus * p_plus).derivative(), delta, Sign::minus));
  cex.certificates.push_back(exact_cert(
      "(p-^2)'(delta)", (p_minus * p_minus).derivative(), delta, Sign::plus));
  return cex;
}

bool reverify(const Counterexample& cex, const RealPoint& alpha,
              const SignOptions& opt) {
  for (const CertifiedInequality& ci : cex.certificates) {
    switch (ci.kind) {
      case CertifiedInequality::Kind::at_alpha: {
        SignOptions o = opt;
        o.use_cache = false;
        o.start_bits = 2 * std::max(ci.bits_used, opt.start_bits);
        o.max_bits = std::max(o.max_bits, o.start_bits);
        if (sign_at(RationalFunction(ci.poly), alpha, o) != ci.required)
          return false;
        break;
      }
      case CertifiedInequality::Kind::at_exact:
        if (sign_of(ci.poly.eval(ci.where)) != ci.required) return false;
        break;
      case CertifiedInequality::Kind::im_power: {
        Complex z = complex_pow({QuadExt(ci.re), QuadExt(ci.im)}, ci.power);
        if (z.second.sign() != ci.required) return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace invdec
