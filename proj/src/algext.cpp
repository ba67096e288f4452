#include "invdec/algext.hpp"

#include <algorithm>
#include <utility>

#include "invdec/errors.hpp"

namespace invdec {

NumberField::NumberField(UniPoly minpoly, const Interval& isolating)
    : minpoly_(std::move(minpoly)),
      root_(RealPoint::algebraic(minpoly_, isolating)),
      degree_(static_cast<unsigned>(minpoly_.degree())) {
  if (minpoly_.leading() != Rational(1))
    throw DomainError("the defining polynomial must be monic");
}

bool FieldElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Rational& c) { return sign_of(c) == Sign::zero; });
}

UniPoly to_poly(const FieldElement& x) { return UniPoly(x.coords); }

FieldElement reduce_mod(const UniPoly& p, const NumberField& field) {
  UniPoly rem = divmod(p, field.minpoly()).second;
  FieldElement out;
  out.coords.resize(field.degree(), Rational(0));
  for (unsigned k = 0; k < field.degree(); ++k) out.coords[k] = rem.coeff(k);
  return out;
}

namespace {

void check_length(const FieldElement& x, const NumberField& field) {
  if (x.coords.size() != field.degree())
    throw DomainError("coordinate length does not match the field degree");
}

}  // namespace

FieldElement field_add(const FieldElement& x, const FieldElement& y,
                       const NumberField& field) {
  check_length(x, field);
  check_length(y, field);
  FieldElement out = x;
  for (unsigned k = 0; k < field.degree(); ++k)
    out.coords[k] += y.coords[k];
  return out;
}

FieldElement field_mul(const FieldElement& x, const FieldElement& y,
                       const NumberField& field) {
  check_length(x, field);
  check_length(y, field);
  return reduce_mod(to_poly(x) * to_poly(y), field);
}

Sign element_sign(const FieldElement& x, const NumberField& field,
                  const SignOptions& opt) {
  check_length(x, field);
  if (x.is_zero()) return Sign::zero;
  return sign_at(to_poly(x), field.root(), opt);
}

Witness indecomposability_witness(const NumberField& field,
                                  const SignOptions& opt) {
  bool kernel_ok = reduce_mod(field.minpoly(), field).is_zero();
  if (!kernel_ok)
    throw Error("internal",
                "the defining polynomial did not reduce to zero in its own field");
  SignResult r =
      sign_at_traced(RationalFunction(field.minpoly().derivative()),
                     field.root(), opt);
  if (r.sign == Sign::zero)
    throw Error("internal",
                "the defining polynomial is not separable at the root");
  return Witness{field, kernel_ok, r.sign, r.bits_used};
}

}  // namespace invdec
