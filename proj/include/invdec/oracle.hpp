#pragma once

#include <optional>
#include <vector>

#include "invdec/derivsplit.hpp"
#include "invdec/hyperplane.hpp"
#include "invdec/multipoly.hpp"
#include "invdec/realpoint.hpp"
#include "invdec/report.hpp"
#include "invdec/unipoly.hpp"

namespace invdec {

// A finite, deterministically ordered family of test polynomials: dense
// coefficient tuples over a height-bounded grid. The grid holds every
// reduced fraction num/den with |num| <= height and 1 <= den <= height
// (just the integers -height..height when integer_coeffs is set), in
// ascending order. Tuples run lexicographically with the highest-degree
// coefficient as the slowest index. An optional filter keeps only the
// polynomials positive at a point tuple.
struct Corpus {
  long max_degree = 0;
  long height = 1;
  unsigned arity = 1;
  bool integer_coeffs = false;
  std::optional<PointTuple> positive_at;
};

std::vector<Rational> coefficient_grid(long height, bool integer_coeffs);

// Every polynomial within the bounds exactly once. The univariate form
// requires arity 1; the multivariate form fills monomials of total degree
// up to max_degree in graded lexicographic order.
std::vector<UniPoly> enumerate_uni(const Corpus& corpus);
std::vector<MultiPoly> enumerate_multi(const Corpus& corpus);

// Checks that sums and products of same-piece pairs stay in the piece, over
// every positive corpus element. Falls back to a deterministic strided
// sample, recorded in the report, when the pair count exceeds the budget.
Report verify_closure(const RealPoint& alpha, const Corpus& corpus,
                      const SignOptions& opt = {});

// Checks that adding a rational shift never moves a positive element to a
// different piece (as long as the shifted element stays positive), plus one
// exact two-variable polynomial identity behind the translation argument.
Report verify_translation(const RealPoint& alpha, const Corpus& corpus,
                          const std::vector<Rational>& shifts,
                          const SignOptions& opt = {});

// Checks that classifying a quotient through the numerator/denominator
// lifting rule agrees with classifying the reduced quotient directly, on
// seeded random coprime positive pairs, under both zero policies.
Report verify_lift_agreement(const RealPoint& alpha, long samples,
                             unsigned long seed, const SignOptions& opt = {});

// Checks the three-term recursion residue of each kind's closed-form prefix
// up to index K, and that the second and third entries recover the kind
// (when they are rational and the round trip is possible).
Report verify_recursion(const std::vector<HyperplaneKind>& kinds, unsigned K);

}  // namespace invdec
