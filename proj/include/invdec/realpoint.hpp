#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invdec/interval.hpp"
#include "invdec/multiratfun.hpp"
#include "invdec/ratfun.hpp"
#include "invdec/unipoly.hpp"

namespace invdec {

struct SignOptions {
  long start_bits = 64;
  long max_bits = 1L << 16;
  // false forces recomputation from the constructed state, ignoring and not
  // touching any cached enclosure (used to re-verify certificates
  // independently)
  bool use_cache = true;
};

// A computable real number handed to the sign oracle. Three flavors:
//   - the built-in transcendental constants pi and e,
//   - a digit stream / enclosure callback (treated as transcendental on the
//     caller's promise),
//   - a real algebraic number given by a squarefree minimal polynomial plus
//     an isolating interval, verified at construction (endpoint sign change
//     and a Sturm root count of exactly one).
//
// Value semantics: copies share one internally synchronized enclosure cache.
class RealPoint {
public:
  static RealPoint pi();
  static RealPoint e();

  // The construction check rejects non-squarefree polynomials and intervals
  // that do not isolate exactly one root. Irreducibility is verified up to
  // linear factors (rational root scan, effort-bounded); degrees >= 4 could
  // in principle hide higher-degree factorizations, which the scan cannot
  // see. trust_irreducible skips the effort bound complaint for polynomials
  // whose irreducibility the caller knows.
  static RealPoint algebraic(const UniPoly& minpoly, const Interval& isolating,
                             bool trust_irreducible = false);

  // enclosure(bits) must return an interval of width <= 2^-bits containing
  // the value; successive results must all contain it (so they intersect)
  static RealPoint digit_stream(std::string name, std::function<Interval(long)> enclosure);

  // Loads "decimal <count>" followed by a decimal literal; a k-digit prefix
  // of the fraction yields an enclosure of width 10^-k. Runs out of digits
  // with a PrecisionError.
  static RealPoint from_digit_file(const std::string& path);

  // Enclosure of width <= 2^-bits. Thread-safe. Enclosures from different
  // calls always intersect (they all contain the value).
  Interval refine(long bits, bool use_cache = true) const;

  bool is_algebraic() const;
  const UniPoly* minpoly() const;      // null for transcendental variants
  const Interval* isolating() const;   // as constructed; null for transcendental
  // exact value when the point is algebraic of degree 1
  std::optional<Rational> exact_rational() const;
  const std::string& name() const;

private:
  struct State;
  std::shared_ptr<State> s_;
  explicit RealPoint(std::shared_ptr<State> s) : s_(std::move(s)) {}
};

// An ordered tuple of evaluation points. Multivariate sign queries whose
// tuple contains a transcendental-variant point require the caller's pledge
// that the coordinates are algebraically independent; the oracle's zero test
// rests on it.
struct PointTuple {
  std::vector<RealPoint> points;
  bool independence_promise = false;
};

struct SignResult {
  Sign sign;
  long bits_used;  // 0 when the query resolved without interval refinement
};

// Exact sign of r at the point. Zero is decided first, symbolically: at a
// transcendental point a reduced nonzero function never vanishes; at an
// algebraic point vanishing is exactly "minpoly divides num". Then interval
// refinement with doubling precision determines the sign; hitting max_bits
// raises PrecisionError. A denominator vanishing at an algebraic point is a
// DomainError.
SignResult sign_at_traced(const RationalFunction& r, const RealPoint& pt,
                          const SignOptions& opt = {});
Sign sign_at(const RationalFunction& r, const RealPoint& pt, const SignOptions& opt = {});
Sign sign_at(const UniPoly& p, const RealPoint& pt, const SignOptions& opt = {});

// Multivariate counterpart. Arity-1 queries delegate to the univariate
// oracle (exact for algebraic points); otherwise the zero test is "num is
// the zero polynomial", valid under the independence promise, and precision
// exhaustion signals a broken promise or an insufficient cap.
SignResult sign_at_tuple_traced(const MultiRationalFunction& r, const PointTuple& tup,
                                const SignOptions& opt = {});
Sign sign_at_tuple(const MultiRationalFunction& r, const PointTuple& tup,
                   const SignOptions& opt = {});

// Raw series enclosures (no caching), exposed for direct testing.
Interval pi_enclosure(long bits);
Interval e_enclosure(long bits);

}  // namespace invdec
