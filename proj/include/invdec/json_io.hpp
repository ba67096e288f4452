#pragma once

#include <string>

#include "invdec/algext.hpp"
#include "invdec/derivsplit.hpp"
#include "invdec/hyperplane.hpp"
#include "invdec/report.hpp"
#include "json.hpp"

namespace invdec {

// Insertion-ordered JSON so that fixed inputs dump to byte-identical text.
using Json = nlohmann::ordered_json;

// Every mathematical quantity serializes as an exact string (fractions,
// radicals, canonical polynomial text), never as a float. Counters such as
// case totals, powers, and bit budgets stay JSON integers.
Json json_of(const Rational& q);
Json json_of(const QuadExt& q);
Json json_of(const UniPoly& p);
Json json_of(const HyperplaneKind& kind);
Json json_of(const CertifiedInequality& cert);
Json json_of(const Counterexample& cex);
Json json_of(const Violation& v);
Json json_of(const Report& rep);
Json json_of(const Witness& w);
Json json_of(const DerivationSpec& d);
Json json_of(const BuiltPlan& built);

Json error_json(const std::string& code, const std::string& message);

// Canonical dump: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace invdec
