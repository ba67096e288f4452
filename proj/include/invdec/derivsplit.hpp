#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invdec/multiratfun.hpp"
#include "invdec/ratfun.hpp"
#include "invdec/realpoint.hpp"
#include "invdec/unipoly.hpp"

namespace invdec {

// The three pieces of the derivative-sign decomposition of the positive
// cone at a point: Plus / Zero / Minus by the sign of r'(alpha).
enum class Piece { plus, zero, minus };

// Exactly two ways to merge the three pieces into a nontrivial 2-piece
// decomposition: the zero piece rides with Plus or with Minus.
enum class TwoPolicy { zero_with_plus, zero_with_minus };

enum class TwoClass { h1, h2 };

const char* to_cstring(Piece p);
const char* to_cstring(TwoClass c);
const char* to_cstring(TwoPolicy p);

// One rational direction l = (c_1, ..., c_m) defining the derivation
// D = c_1 d/dx_1 + ... + c_m d/dx_m.
struct DerivationSpec {
  std::vector<Rational> coefficients;

  // at least one entry, not all zero
  explicit DerivationSpec(std::vector<Rational> c);

  std::size_t arity() const { return coefficients.size(); }
  bool operator==(const DerivationSpec& o) const = default;
};

// D applied to r: the linear combination of partial derivatives.
MultiRationalFunction apply(const DerivationSpec& d,
                            const MultiRationalFunction& r);

// true when a and b span the same line (a = q*b for some rational q)
bool proportional(const DerivationSpec& a, const DerivationSpec& b);

// Classifies a positive element by the sign of its derivative at alpha.
// At a transcendental point Zero lands exactly on the positive rationals.
// Requires sign_at(r, alpha) = +.
Piece classify3(const RationalFunction& r, const RealPoint& alpha,
                const SignOptions& opt = {});
struct PieceResult {
  Piece piece;
  long bits_used;
};
PieceResult classify3_traced(const RationalFunction& r, const RealPoint& alpha,
                             const SignOptions& opt = {});

// The 2-piece classifier induced by a policy: H1 gets Plus (and Zero under
// zero_with_plus); H2 gets the rest.
TwoClass classify2(const RationalFunction& r, const RealPoint& alpha,
                   TwoPolicy policy, const SignOptions& opt = {});
TwoClass to_two_class(Piece p, TwoPolicy policy);

// A linear polynomial l = ax + b with l(alpha) > 0 that splits the product
// derivatives: sign((p1*l)'(alpha)) != sign((p2*l)'(alpha)). The threshold
// -a/(a*alpha+b) is placed strictly between the logarithmic derivatives
// c = p1'(alpha)/p1(alpha) and d = p2'(alpha)/p2(alpha) by mediant search
// on certified enclosures, keeping l(alpha) inside (3/4, 5/4).
//
// Requires p1, p2 positive at alpha with equal nonzero derivative signs and
// p1 not a rational multiple of p2 (c = d is rejected exactly).
UniPoly find_separating_linear(const UniPoly& p1, const UniPoly& p2,
                               const RealPoint& alpha,
                               const SignOptions& opt = {});

// Classifies t = p1/p2 by the constructive route: a denominator with
// vanishing derivative or an opposite class keeps the class of p1; equal
// nonzero derivative signs multiply both by a separating linear factor
// first. Agrees with classify2 on the normalized quotient. Requires p1, p2
// positive at alpha and gcd(p1, p2) = 1.
TwoClass lift_classify(const UniPoly& p1, const UniPoly& p2,
                       const RealPoint& alpha, TwoPolicy policy,
                       const SignOptions& opt = {});

// A same-degree, same-leading-coefficient companion of g that is a product
// of a positive rational and rational linear factors, squeezed under g at
// alpha: 0 < h(alpha) < g(alpha). For a negative leading coefficient
// exactly one factor is reversed (beta' - x) with beta < alpha < beta'.
struct GeneratorFactors {
  Rational constant;                   // > 0
  Rational beta;                       // repeated root of the (x - beta) factors
  unsigned multiplicity;               // how many (x - beta) factors
  std::optional<Rational> beta_prime;  // the single (beta' - x) factor, if any

  UniPoly expanded() const;
  std::string to_string() const;
};
// Requires g(alpha) > 0 and degree(g) >= 2.
GeneratorFactors generator_decomposition_factors(const UniPoly& g,
                                                 const RealPoint& alpha,
                                                 const SignOptions& opt = {});
UniPoly generator_decomposition(const UniPoly& g, const RealPoint& alpha,
                                const SignOptions& opt = {});

// One refinement step of an n-piece plan: split piece target_piece by the
// sign of the derivation. The strict half (sign opposite zero_side) keeps
// the id target_piece; the half joined with zero ({0} or the zero_side
// sign) becomes the next fresh piece id (step j creates piece j+1).
struct SplitStep {
  DerivationSpec derivation;
  unsigned target_piece;  // 1-based; must exist when the step runs
  Piece zero_side;        // plus or minus
};

struct SplitPlan {
  std::size_t arity = 0;
  std::vector<SplitStep> steps;

  std::size_t pieces() const { return steps.size() + 1; }
};

// Throws DomainError unless arities agree, every target_piece is in range
// (step j may target 1..j), zero_side is strict, and the step derivations
// are pairwise linearly independent.
void validate(const SplitPlan& plan);

struct BuiltPlan {
  SplitPlan plan;
  // witnesses[i] is a certified positive element of piece i+1
  std::vector<MultiRationalFunction> witnesses;
};

struct PlanOptions {
  Piece zero_side = Piece::minus;
  // forced split targets per step (1-based); empty = lowest-numbered piece
  // where both halves acquire witnesses
  std::vector<unsigned> targets;
  long witness_height = 8;
  SignOptions sign;
};

// Builds the n = |derivs|+1 piece plan by iteratively cutting a piece,
// certifying every piece nonempty with an explicit witness. Requires
// arity >= 2, pairwise independent derivations, and the tuple's
// independence promise.
BuiltPlan build_plan(const std::vector<DerivationSpec>& derivs,
                     const PointTuple& pts, const PlanOptions& opt = {});

// Walks the plan and returns the 1-based piece id of r. Requires
// sign_at_tuple(r, pts) = + and matching arities.
unsigned classify_n(const MultiRationalFunction& r, const PointTuple& pts,
                    const SplitPlan& plan, const SignOptions& opt = {});

}  // namespace invdec
