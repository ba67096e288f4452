#include "invdec/derivsplit.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "invdec/errors.hpp"

namespace invdec {

const char* to_cstring(Piece p) {
  switch (p) {
    case Piece::plus: return "Plus";
    case Piece::zero: return "Zero";
    default: return "Minus";
  }
}

const char* to_cstring(TwoClass c) { return c == TwoClass::h1 ? "H1" : "H2"; }

const char* to_cstring(TwoPolicy p) {
  return p == TwoPolicy::zero_with_plus ? "zero-with-plus" : "zero-with-minus";
}

DerivationSpec::DerivationSpec(std::vector<Rational> c)
    : coefficients(std::move(c)) {
  if (coefficients.empty())
    throw DomainError("empty_derivation",
                      "a derivation needs at least one coefficient");
  if (std::all_of(coefficients.begin(), coefficients.end(),
                  [](const Rational& q) { return q == 0; }))
    throw DomainError("zero_derivation",
                      "derivation coefficients must not all vanish");
}

MultiRationalFunction apply(const DerivationSpec& d,
                            const MultiRationalFunction& r) {
  if (d.arity() != r.arity())
    throw DomainError("arity_mismatch",
                      "derivation and function arities differ");
  MultiRationalFunction acc(r.arity());
  for (std::size_t i = 0; i < d.arity(); ++i) {
    if (d.coefficients[i] == 0) continue;
    MultiRationalFunction scale(r.arity(), d.coefficients[i]);
    acc = acc + scale * r.partial_derivative(i);
  }
  return acc;
}

bool proportional(const DerivationSpec& a, const DerivationSpec& b) {
  if (a.arity() != b.arity())
    throw DomainError("arity_mismatch", "derivation arities differ");
  // all 2x2 minors vanish
  for (std::size_t i = 0; i < a.arity(); ++i)
    for (std::size_t j = i + 1; j < a.arity(); ++j)
      if (a.coefficients[i] * b.coefficients[j] !=
          a.coefficients[j] * b.coefficients[i])
        return false;
  return true;
}

namespace {

Piece piece_of(Sign s) {
  if (s == Sign::plus) return Piece::plus;
  if (s == Sign::minus) return Piece::minus;
  return Piece::zero;
}

}  // namespace

PieceResult classify3_traced(const RationalFunction& r, const RealPoint& alpha,
                             const SignOptions& opt) {
  SignResult value = sign_at_traced(r, alpha, opt);
  if (value.sign != Sign::plus)
    throw DomainError("not_positive",
                      "classification needs a positive element, got sign " +
                          std::string(to_cstring(value.sign)));
  SignResult slope = sign_at_traced(r.derivative(), alpha, opt);
  return {piece_of(slope.sign), std::max(value.bits_used, slope.bits_used)};
}

Piece classify3(const RationalFunction& r, const RealPoint& alpha,
                const SignOptions& opt) {
  return classify3_traced(r, alpha, opt).piece;
}

TwoClass to_two_class(Piece p, TwoPolicy policy) {
  if (p == Piece::plus) return TwoClass::h1;
  if (p == Piece::minus) return TwoClass::h2;
  return policy == TwoPolicy::zero_with_plus ? TwoClass::h1 : TwoClass::h2;
}

TwoClass classify2(const RationalFunction& r, const RealPoint& alpha,
                   TwoPolicy policy, const SignOptions& opt) {
  return to_two_class(classify3(r, alpha, opt), policy);
}

UniPoly find_separating_linear(const UniPoly& p1, const UniPoly& p2,
                               const RealPoint& alpha,
                               const SignOptions& opt) {
  if (sign_at(p1, alpha, opt) != Sign::plus ||
      sign_at(p2, alpha, opt) != Sign::plus)
    throw DomainError("not_positive",
                      "both polynomials must be positive at the point");
  Sign s1 = sign_at(p1.derivative(), alpha, opt);
  Sign s2 = sign_at(p2.derivative(), alpha, opt);
  if (s1 == Sign::zero || s1 != s2)
    throw DomainError("derivative_signs",
                      "derivative signs must be equal and nonzero");
  if (p1.scaled(p2.leading()) == p2.scaled(p1.leading()))
    throw DomainError("rational_multiple",
                      "the polynomials are rational multiples of each other");
  // c = p1'/p1 and d = p2'/p2 at the point must differ; their difference has
  // the sign of p1'p2 - p2'p1 there (positive denominators)
  UniPoly wron = p1.derivative() * p2 - p2.derivative() * p1;
  if (sign_at(wron, alpha, opt) == Sign::zero)
    throw DomainError("equal_log_derivatives",
                      "p1'/p1 = p2'/p2 at the point; no linear separator");

  long bits = opt.start_bits;
  while (true) {
    Interval ia = alpha.refine(bits, opt.use_cache);
    Interval v1 = eval_on(p1, ia), v2 = eval_on(p2, ia);
    Interval g1 = eval_on(p1.derivative(), ia), g2 = eval_on(p2.derivative(), ia);
    if (!v1.contains_zero() && !v2.contains_zero()) {
      Interval c_enc = g1 / v1, d_enc = g2 / v2;
      if (!c_enc.intersects(d_enc)) {
        // the certified open gap (lo, hi) between c and d
        bool c_below = c_enc.hi < d_enc.lo;
        Rational lo = c_below ? c_enc.hi : d_enc.hi;
        Rational hi = c_below ? d_enc.lo : c_enc.lo;
        Rational tau = simplest_between(lo, hi);
        Rational a = -tau;
        // The threshold -a/(a*alpha+b) = tau/l(alpha) must land in the gap,
        // so l(alpha) must land in the window tau/(lo,hi); it straddles 1,
        // and we additionally keep l(alpha) in (3/4, 5/4).
        Rational t_lo = tau / lo, t_hi = tau / hi;
        Rational win_lo = std::max(std::min(t_lo, t_hi), Rational(3, 4));
        Rational win_hi = std::min(std::max(t_lo, t_hi), Rational(5, 4));
        Interval aa = ia * a;
        Rational b_lo = win_lo - aa.lo;
        Rational b_hi = win_hi - aa.hi;
        if (b_lo < b_hi) {
          Rational b = simplest_between(b_lo, b_hi);
          UniPoly l(std::vector<Rational>{b, a});
          // the construction guarantees these; check them anyway
          Sign q1 = sign_at((p1 * l).derivative(), alpha, opt);
          Sign q2 = sign_at((p2 * l).derivative(), alpha, opt);
          if (sign_at(l, alpha, opt) != Sign::plus || q1 == Sign::zero ||
              q2 == Sign::zero || q1 == q2)
            throw Error("internal",
                        "separating linear failed its own postcondition");
          return l;
        }
      }
    }
    if (bits >= opt.max_bits)
      throw PrecisionError("separating-linear search hit the precision cap");
    bits = std::min(opt.max_bits, bits * 2);
  }
}

TwoClass lift_classify(const UniPoly& p1, const UniPoly& p2,
                       const RealPoint& alpha, TwoPolicy policy,
                       const SignOptions& opt) {
  if (sign_at(p1, alpha, opt) != Sign::plus ||
      sign_at(p2, alpha, opt) != Sign::plus)
    throw DomainError("not_positive",
                      "numerator and denominator must be positive at the point");
  if (!gcd(p1, p2).is_constant())
    throw DomainError("not_coprime", "p1 and p2 share a polynomial factor");
  Sign s1 = sign_at(p1.derivative(), alpha, opt);
  Sign s2 = sign_at(p2.derivative(), alpha, opt);
  Sign quotient_slope;
  if (s2 == Sign::zero) {
    // constants and flat denominators leave the numerator's class
    quotient_slope = s1;
  } else if (s1 == Sign::zero) {
    quotient_slope = -s2;
  } else if (s1 != s2) {
    // different strict classes: the class of the numerator wins
    quotient_slope = s1;
  } else {
    // equal strict signs: compare the logarithmic derivatives; if they tie
    // the quotient is flat, otherwise a separating linear factor turns this
    // into the different-class case
    UniPoly wron = p1.derivative() * p2 - p2.derivative() * p1;
    Sign sw = sign_at(wron, alpha, opt);
    if (sw == Sign::zero) {
      quotient_slope = Sign::zero;
    } else {
      UniPoly l = find_separating_linear(p1, p2, alpha, opt);
      quotient_slope = sign_at((p1 * l).derivative(), alpha, opt);
    }
  }
  return to_two_class(piece_of(quotient_slope), policy);
}

UniPoly GeneratorFactors::expanded() const {
  UniPoly h = UniPoly(constant) *
              UniPoly(std::vector<Rational>{-beta, 1}).pow(multiplicity);
  if (beta_prime)
    h = h * UniPoly(std::vector<Rational>{*beta_prime, -1});
  return h;
}

std::string GeneratorFactors::to_string() const {
  std::string s = invdec::to_string(constant);
  if (multiplicity > 0) {
    s += beta < 0 ? "*(x+" + invdec::to_string(-beta) + ")"
                  : "*(x-" + invdec::to_string(beta) + ")";
    if (multiplicity > 1) s += "^" + std::to_string(multiplicity);
  }
  if (beta_prime) s += "*(" + invdec::to_string(*beta_prime) + "-x)";
  return s;
}

GeneratorFactors generator_decomposition_factors(const UniPoly& g,
                                                 const RealPoint& alpha,
                                                 const SignOptions& opt) {
  if (g.degree() < 2)
    throw DomainError("degree", "the generator must have degree at least 2");
  if (sign_at(g, alpha, opt) != Sign::plus)
    throw DomainError("not_positive", "the generator must be positive at the point");
  auto n = static_cast<unsigned>(g.degree());
  bool negative_lead = g.leading() < 0;
  std::optional<Rational> exact = alpha.exact_rational();

  long bits = 8;
  while (true) {
    // rational brackets beta < alpha < beta' tight enough that the squeeze
    // certifies; for an exact rational point the enclosure is degenerate,
    // so step off by 2^-bits instead
    Rational eps =
        Rational(1) / Rational(Integer(1) << static_cast<unsigned long>(bits));
    Rational beta, beta_prime;
    if (exact) {
      beta = *exact - eps;
      beta_prime = *exact + eps;
    } else {
      // snap the enclosure outward to the 2^-bits grid. Taking the raw
      // endpoints instead would leave a gap below alpha that shrinks with
      // the shared enclosure cache, and certifying h > 0 across a gap of
      // cache width needs a strictly tighter enclosure than the cache
      // holds: each call would ratchet the cache until the precision cap.
      // The snapped gap stays on the order of 2^-bits no matter how tight
      // the cache already is, so the positivity checks settle at a bounded
      // precision.
      Interval ia = alpha.refine(bits, opt.use_cache);
      beta = Rational(floor_int(ia.lo / eps)) * eps - eps;
      beta_prime = Rational(ceil_int(ia.hi / eps)) * eps + eps;
    }
    GeneratorFactors f;
    f.constant = abs(g.leading());
    f.beta = beta;
    f.multiplicity = negative_lead ? n - 1 : n;
    if (negative_lead) f.beta_prime = beta_prime;
    UniPoly h = f.expanded();
    if (h != g && sign_at(h, alpha, opt) == Sign::plus &&
        sign_at(g - h, alpha, opt) == Sign::plus)
      return f;
    if (bits >= opt.max_bits)
      throw PrecisionError("generator squeeze hit the precision cap");
    bits = std::min(opt.max_bits, bits * 2);
  }
}

UniPoly generator_decomposition(const UniPoly& g, const RealPoint& alpha,
                                const SignOptions& opt) {
  return generator_decomposition_factors(g, alpha, opt).expanded();
}

void validate(const SplitPlan& plan) {
  if (plan.arity == 0)
    throw DomainError("arity", "plan arity must be at least 1");
  for (std::size_t j = 0; j < plan.steps.size(); ++j) {
    const SplitStep& st = plan.steps[j];
    if (st.derivation.arity() != plan.arity)
      throw DomainError("arity_mismatch",
                        "step " + std::to_string(j + 1) +
                            " derivation arity differs from the plan");
    if (st.target_piece < 1 || st.target_piece > j + 1)
      throw DomainError("bad_target",
                        "step " + std::to_string(j + 1) +
                            " targets a piece that does not exist yet");
    if (st.zero_side == Piece::zero)
      throw DomainError("zero_side", "zero_side must be Plus or Minus");
    for (std::size_t i = 0; i < j; ++i)
      if (proportional(plan.steps[i].derivation, st.derivation))
        throw DomainError("dependent_derivations",
                          "steps " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) +
                              " use proportional derivations");
  }
}

unsigned classify_n(const MultiRationalFunction& r, const PointTuple& pts,
                    const SplitPlan& plan, const SignOptions& opt) {
  validate(plan);
  if (r.arity() != plan.arity)
    throw DomainError("arity_mismatch", "function arity differs from the plan");
  if (sign_at_tuple(r, pts, opt) != Sign::plus)
    throw DomainError("not_positive",
                      "classification needs a positive element");
  unsigned current = 1;
  for (std::size_t j = 0; j < plan.steps.size(); ++j) {
    const SplitStep& st = plan.steps[j];
    if (st.target_piece != current) continue;
    Sign s = sign_at_tuple(apply(st.derivation, r), pts, opt);
    Sign joined = st.zero_side == Piece::plus ? Sign::plus : Sign::minus;
    // the zero-joined half becomes the fresh piece; the strict half keeps
    // the target's id
    if (s == Sign::zero || s == joined) current = static_cast<unsigned>(j + 2);
  }
  return current;
}

namespace {

// What a derivation's sign must satisfy inside one piece's cell.
enum class Want { strict_plus, strict_minus, zero_or_plus, zero_or_minus };

struct Constraint {
  const DerivationSpec* deriv;
  Want want;
};
using Cell = std::vector<Constraint>;

bool satisfies(Sign s, Want w) {
  switch (w) {
    case Want::strict_plus: return s == Sign::plus;
    case Want::strict_minus: return s == Sign::minus;
    case Want::zero_or_plus: return s != Sign::minus;
    default: return s != Sign::plus;
  }
}

bool is_soft(Want w) {
  return w == Want::zero_or_plus || w == Want::zero_or_minus;
}

Sign direction_sign(const DerivationSpec& d, const std::vector<Rational>& a) {
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += d.coefficients[i] * a[i];
  return sign_of(acc);
}

bool cell_ok(const Cell& cell, const std::vector<Rational>& a) {
  for (const Constraint& c : cell)
    if (!satisfies(direction_sign(*c.deriv, a), c.want)) return false;
  return true;
}

// Exact null-space basis of the given rows (each of length m).
std::vector<std::vector<Rational>> null_space(
    std::vector<std::vector<Rational>> rows, std::size_t m) {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < m && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    Rational lead = rows[rank][col];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (std::size_t c = 0; c < m; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(m, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t col = 0; col < m; ++col) {
    if (is_pivot[col]) continue;
    std::vector<Rational> v(m, Rational(0));
    v[col] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Scales a rational vector to a primitive integer one (same sign pattern).
std::vector<Rational> primitive_direction(const std::vector<Rational>& a) {
  Integer lcm_den(1), gcd_num(0);
  for (const Rational& q : a) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
  }
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] * Rational(lcm_den);
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(),
            out[i].get_num().get_mpz_t());
  }
  if (gcd_num > 1)
    for (auto& q : out) q /= Rational(gcd_num);
  return out;
}

// Deterministic search for a direction vector whose derivation signs satisfy
// the cell: soft constraints try the exact-zero hyperplane first (most zeros
// first), strict leftovers are covered by an integer grid over the null
// space, coordinates bounded by `height`.
std::optional<std::vector<Rational>> find_direction(const Cell& cell,
                                                    std::size_t m,
                                                    long height) {
  std::vector<std::size_t> soft;
  for (std::size_t i = 0; i < cell.size(); ++i)
    if (is_soft(cell[i].want)) soft.push_back(i);

  std::vector<unsigned> masks(static_cast<std::size_t>(1) << soft.size());
  for (unsigned i = 0; i < masks.size(); ++i) masks[i] = i;
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return __builtin_popcount(a) > __builtin_popcount(b);
  });

  for (unsigned mask : masks) {
    std::vector<std::vector<Rational>> zero_rows;
    for (std::size_t i = 0; i < soft.size(); ++i)
      if (mask & (1u << i))
        zero_rows.push_back(cell[soft[i]].deriv->coefficients);
    std::vector<std::vector<Rational>> basis =
        zero_rows.empty()
            ? [&] {
                std::vector<std::vector<Rational>> id;
                for (std::size_t i = 0; i < m; ++i) {
                  std::vector<Rational> v(m, Rational(0));
                  v[i] = 1;
                  id.push_back(std::move(v));
                }
                return id;
              }()
            : null_space(std::move(zero_rows), m);
    if (basis.empty()) {
      // only the zero vector; it can satisfy a cell with no strict wants
      std::vector<Rational> zero(m, Rational(0));
      if (cell_ok(cell, zero)) return zero;
      continue;
    }
    std::size_t k = basis.size();
    for (long h = 1; h <= height; ++h) {
      std::vector<long> y(k, -h);
      while (true) {
        bool on_shell = false;
        for (long c : y)
          if (c == h || c == -h) on_shell = true;
        if (on_shell) {
          std::vector<Rational> a(m, Rational(0));
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t c = 0; c < m; ++c) a[c] += Rational(y[i]) * basis[i][c];
          bool nonzero = std::any_of(a.begin(), a.end(),
                                     [](const Rational& q) { return q != 0; });
          if (nonzero && cell_ok(cell, a)) return primitive_direction(a);
        }
        // odometer
        std::size_t pos = 0;
        while (pos < k && y[pos] == h) y[pos++] = -h;
        if (pos == k) break;
        ++y[pos];
      }
    }
    // the pure zero vector as a last resort for this mask
    std::vector<Rational> zero(m, Rational(0));
    if (cell_ok(cell, zero)) return zero;
  }
  return std::nullopt;
}

MultiRationalFunction direction_witness(const std::vector<Rational>& a,
                                        const PointTuple& pts) {
  std::size_t m = a.size();
  bool zero = std::all_of(a.begin(), a.end(),
                          [](const Rational& q) { return q == 0; });
  Rational shift(0);
  if (zero) {
    shift = 1;
  } else {
    Interval acc{Rational(0)};
    for (std::size_t i = 0; i < m; ++i)
      if (a[i] != 0) acc = acc + pts.points[i].refine(32) * a[i];
    if (!(acc.lo > 0)) {
      Integer whole = floor_int(-acc.lo) + 1;
      shift = Rational(whole);
    }
  }
  MultiPoly p(m, shift);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    MultiPoly::Exponents e(m, 0);
    e[i] = 1;
    p += MultiPoly::monomial(m, e, a[i]);
  }
  return MultiRationalFunction(p);
}

}  // namespace

BuiltPlan build_plan(const std::vector<DerivationSpec>& derivs,
                     const PointTuple& pts, const PlanOptions& opt) {
  std::size_t m = pts.points.size();
  if (m < 2)
    throw DomainError("arity", "plans need at least two coordinates");
  if (!pts.independence_promise)
    throw DomainError("independence_required",
                      "build_plan needs the tuple's independence promise");
  if (derivs.empty())
    throw DomainError("no_derivations", "at least one derivation is required");
  for (const DerivationSpec& d : derivs)
    if (d.arity() != m)
      throw DomainError("arity_mismatch",
                        "derivation arity differs from the tuple");
  for (std::size_t i = 0; i < derivs.size(); ++i)
    for (std::size_t j = i + 1; j < derivs.size(); ++j)
      if (proportional(derivs[i], derivs[j]))
        throw DomainError("dependent_derivations",
                          "derivations " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " are proportional");
  if (opt.zero_side == Piece::zero)
    throw DomainError("zero_side", "zero_side must be Plus or Minus");
  if (!opt.targets.empty() && opt.targets.size() != derivs.size())
    throw DomainError("targets",
                      "forced targets must match the derivation count");

  Want strict = opt.zero_side == Piece::plus ? Want::strict_minus
                                             : Want::strict_plus;
  Want joined = opt.zero_side == Piece::plus ? Want::zero_or_plus
                                             : Want::zero_or_minus;

  SplitPlan plan;
  plan.arity = m;
  std::vector<Cell> cells{Cell{}};
  for (std::size_t j = 0; j < derivs.size(); ++j) {
    bool placed = false;
    for (unsigned k = 1; k <= cells.size() && !placed; ++k) {
      if (!opt.targets.empty() && opt.targets[j] != k) continue;
      Cell strict_cell = cells[k - 1];
      strict_cell.push_back({&derivs[j], strict});
      Cell joined_cell = cells[k - 1];
      joined_cell.push_back({&derivs[j], joined});
      if (find_direction(strict_cell, m, opt.witness_height) &&
          find_direction(joined_cell, m, opt.witness_height)) {
        cells[k - 1] = std::move(strict_cell);
        cells.push_back(std::move(joined_cell));
        plan.steps.push_back(
            {derivs[j], k, opt.zero_side});
        placed = true;
      }
    }
    if (!placed)
      throw DomainError("witness_search_exhausted",
                        "no piece admits witnesses for step " +
                            std::to_string(j + 1) +
                            " within the height bound");
  }

  BuiltPlan built;
  built.plan = std::move(plan);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto dir = find_direction(cells[i], m, opt.witness_height);
    if (!dir)
      throw DomainError("witness_search_exhausted",
                        "piece " + std::to_string(i + 1) + " lost its witness");
    MultiRationalFunction w = direction_witness(*dir, pts);
    if (sign_at_tuple(w, pts, opt.sign) != Sign::plus ||
        classify_n(w, pts, built.plan, opt.sign) != i + 1)
      throw Error("internal", "witness certification failed for piece " +
                                  std::to_string(i + 1));
    built.witnesses.push_back(std::move(w));
  }
  return built;
}

}  // namespace invdec
