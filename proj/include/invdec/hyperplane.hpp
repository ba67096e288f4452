#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invdec/quadext.hpp"
#include "invdec/realpoint.hpp"
#include "invdec/report.hpp"
#include "invdec/unipoly.hpp"

namespace invdec {

// The three families of multiplication-closed coefficient hyperplanes:
// polynomials agreeing at two points, polynomials with a critical point at
// delta, and polynomials real at a complex point u + vi.
enum class Family { two_point, derivation, complex_pair };

const char* to_cstring(Family f);

class HyperplaneKind {
 public:
  // Distinct evaluation points; stored in ascending order.
  static HyperplaneKind two_point(const QuadExt& beta, const QuadExt& gamma);
  // Critical point, exact or a transcendental computable real.
  static HyperplaneKind derivation(const QuadExt& delta);
  static HyperplaneKind derivation(const RealPoint& delta);
  // Complex point u + vi with v != 0; stored with v > 0 (conjugation
  // symmetry). u and v must lie in a common quadratic field.
  static HyperplaneKind complex_pair(const QuadExt& u, const QuadExt& v);

  Family family() const { return family_; }

  const QuadExt& beta() const;
  const QuadExt& gamma() const;
  bool has_exact_delta() const;
  const QuadExt& delta() const;
  const RealPoint& delta_point() const;
  const QuadExt& u() const;
  const QuadExt& v() const;

  std::string to_string() const;

 private:
  HyperplaneKind(Family f, std::vector<QuadExt> params,
                 std::optional<RealPoint> pt)
      : family_(f), params_(std::move(params)), point_(std::move(pt)) {}

  Family family_;
  std::vector<QuadExt> params_;
  std::optional<RealPoint> point_;
};

// Normal-vector prefix (lambda_0, lambda_1, ...) of a hyperplane, always
// starting 0, 1.
using LambdaSeq = std::vector<QuadExt>;

// Exact i-th normal-vector entry. Throws DomainError for a derivation kind
// whose critical point is transcendental (no exact closed form exists).
QuadExt lambda_closed_form(const HyperplaneKind& kind, unsigned i);

// Closed-form prefix lambda_0 .. lambda_K.
LambdaSeq lambda_prefix(const HyperplaneKind& kind, unsigned K);

// Extends (l1, l2, l3) to lambda_0 .. lambda_K by the three-term rule
// lambda_{j+2} = l2*lambda_{j+1} + (l3 - l2^2)*lambda_j. Requires the
// normalization l1 = 1.
LambdaSeq lambda_recursion_extend(const QuadExt& l1, const QuadExt& l2,
                                  const QuadExt& l3, unsigned K);

// Recovers the hyperplane from its second and third normal-vector entries by
// the sign of 3*l2^2 - 4*l3: negative selects two-point, zero derivation,
// positive complex-pair. Recovered parameters may be quadratic irrationals.
HyperplaneKind classify_params(const Rational& l2, const Rational& l3);

// Exact membership test: p(beta) = p(gamma), p'(delta) = 0, or
// Im p(u + vi) = 0 according to the family. A transcendental critical point
// accepts exactly the polynomials with identically zero derivative.
bool membership(const UniPoly& p, const HyperplaneKind& kind);

// For every pair whose members both lie in the hyperplane, checks that their
// product does too. Expected to pass for every kind.
Report check_product_closure(const HyperplaneKind& kind,
                             const std::vector<std::pair<UniPoly, UniPoly>>& samples);

// One inequality backing a counterexample, re-checkable on demand. Exact
// checks (rational evaluation, complex powering) record bits_used = 0.
struct CertifiedInequality {
  enum class Kind {
    at_alpha,   // sign of poly at the base point, via the sign oracle
    at_exact,   // sign of poly at the rational point `where`
    im_power,   // sign of Im((re + im*i)^power)
  };

  std::string label;
  Kind kind;
  UniPoly poly;
  Rational where;
  Rational re, im;
  unsigned power = 1;
  Sign required;
  long bits_used = 0;
};

// Certificate that a candidate splitting set fails multiplicative closure:
// one or two explicit polynomials plus the inequalities proving it, each
// verified at construction time.
struct Counterexample {
  std::vector<UniPoly> witnesses;
  std::optional<unsigned> power;
  std::vector<CertifiedInequality> certificates;
};

// Builds p with p(alpha) > 0, p(c) > 0 and p(b) < -p(c), so p and p^2 fall
// on opposite sides of the two-point hyperplane at (b, c). Pass nullopt for
// c to place that point at alpha itself; b must always be rational and
// distinct from both c and alpha.
Counterexample counterexample_twopoint(const RealPoint& alpha,
                                       const std::optional<Rational>& b,
                                       const std::optional<Rational>& c,
                                       const SignOptions& opt = {});

// Builds p = x + b positive at alpha with Im p(u + vi) > 0 but
// Im (p(u + vi))^n < 0 for the returned power n. A caller-supplied b_hint is
// tried before the default search sequence.
Counterexample counterexample_complex(const RealPoint& alpha, const Rational& u,
                                      const Rational& v,
                                      const std::optional<Rational>& b_hint = std::nullopt,
                                      const SignOptions& opt = {});

// Builds the quadratic pair c(x-delta)^2 +- (x-delta) - 1, both positive at
// alpha and negative at delta, whose squares have first derivatives of the
// opposite sign at delta.
Counterexample counterexample_derivation(const RealPoint& alpha,
                                         const Rational& delta,
                                         const SignOptions& opt = {});

// Re-checks every certified inequality from scratch, spending at least twice
// the refinement the original verification used and bypassing enclosure
// caches. Returns true when all of them still hold.
bool reverify(const Counterexample& cex, const RealPoint& alpha,
              const SignOptions& opt = {});

}  // namespace invdec
