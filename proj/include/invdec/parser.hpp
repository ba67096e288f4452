#pragma once

#include <cstddef>
#include <string>

#include "invdec/interval.hpp"
#include "invdec/multiratfun.hpp"
#include "invdec/unipoly.hpp"

namespace invdec {

// Parse an expression over `x` (arity 1) or `x1..xm` into a canonical
// rational function. Literals are integers and `p/q` fractions (`/` is
// ordinary exact division, usable anywhere); operators are + - * / ^ with
// standard precedence, `^` binding tighter than unary minus and taking a
// non-negative integer literal exponent. Throws ParseError, with a 1-based
// position, on syntax errors, unknown or out-of-range variables, and
// division by the zero polynomial.
MultiRationalFunction parse_expr(const std::string& text, std::size_t arity);

struct FieldDescriptor {
  UniPoly minpoly;     // monic with integer coefficients
  Interval isolating;  // rational endpoints, lo < hi
};

// Parse `field: <polynomial>; root in [lo, hi]`. The polynomial is an
// arity-1 expression that must lower to a monic integer polynomial; lo and
// hi are rational literals with lo < hi. Validation here is structural;
// irreducibility and root isolation are the field constructor's job.
FieldDescriptor parse_field_descriptor(const std::string& text);

}  // namespace invdec
