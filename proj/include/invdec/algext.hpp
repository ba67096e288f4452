#pragma once

#include <vector>

#include "invdec/interval.hpp"
#include "invdec/realpoint.hpp"
#include "invdec/unipoly.hpp"

namespace invdec {

// A simple extension of the rationals by one real algebraic number: the
// monic defining polynomial together with the embedding picked out by an
// isolating interval. Irreducibility is a constructor contract, checked up
// to a bounded effort; shipped fields use known-irreducible polynomials.
class NumberField {
 public:
  NumberField(UniPoly minpoly, const Interval& isolating);

  unsigned degree() const { return degree_; }
  const UniPoly& minpoly() const { return minpoly_; }
  const RealPoint& root() const { return root_; }

 private:
  UniPoly minpoly_;
  RealPoint root_;
  unsigned degree_;
};

// Coordinates in the power basis 1, a, ..., a^(n-1).
struct FieldElement {
  std::vector<Rational> coords;

  bool operator==(const FieldElement& o) const = default;
  bool is_zero() const;
};

// The polynomial with the element's coordinates as coefficients.
UniPoly to_poly(const FieldElement& x);

// Image of p under evaluation at the field generator: the remainder of p
// modulo the defining polynomial, read off as coordinates.
FieldElement reduce_mod(const UniPoly& p, const NumberField& field);

FieldElement field_add(const FieldElement& x, const FieldElement& y,
                       const NumberField& field);
FieldElement field_mul(const FieldElement& x, const FieldElement& y,
                       const NumberField& field);

// Exact sign of the element under the field's real embedding.
Sign element_sign(const FieldElement& x, const NumberField& field,
                  const SignOptions& opt = {});

// The machine-checkable core of the impossibility argument for splitting the
// positive elements of a number field: the defining polynomial lies in the
// kernel of the evaluation map, yet its derivative does not vanish at the
// root, so the one candidate separating hyperplane misses the kernel.
struct Witness {
  NumberField field;
  bool kernel_check;
  Sign derivative_sign;
  long precision_used;
};

// Runs both checks and packages the certificate. A failure of either one
// means the field violates its construction invariants and is reported as an
// internal error.
Witness indecomposability_witness(const NumberField& field,
                                  const SignOptions& opt = {});

}  // namespace invdec
