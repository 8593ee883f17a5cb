#pragma once

#include <json.hpp>
#include <string>

#include "wrlat/enumerate.hpp"
#include "wrlat/matrix.hpp"
#include "wrlat/retraction.hpp"
#include "wrlat/strata.hpp"
#include "wrlat/verify.hpp"

namespace wrlat {

using nlohmann::json;

// Wire conventions: every rational is a string "p/q" (or "p" when the
// denominator is 1); vector coordinates are JSON integers; arbitrary-size
// integers such as subgroup indices are decimal strings.  Floating-point
// input is rejected so that exactness starts at the boundary.

json rat_to_json(const Rat& x);
Rat rat_from_json(const json& j);  // throws ParseError

json vec_to_json(const IntVec& v);
IntVec vec_from_json(const json& j);

json gram_to_json(const SymForm& form);

/// {"n": int, "gram": [[..]]} or {"n": int, "basis": [[..]]}, optional
/// "label".  Exactly one of gram/basis; the result is PD-certified.
struct LatticeInput {
  SymForm form;
  std::string label;
};
LatticeInput lattice_from_json(const json& j);
LatticeInput load_lattice_file(const std::string& path);  // "-" reads stdin

json to_json(const MinimalVectorData& md);
json to_json(const StratumReport& report);
json to_json(const ExhaustionValue& value);
json to_json(const VerificationReport& report);

/// Event entry of a trace: {"r", "tau_decimal", "joining", "k_before",
/// "k_after", "gram_after"}.  tau = ln(r)/(2n) as a high-precision decimal.
json trace_step_to_json(const RetractionStep& step);
json to_json(const RetractionTrace& trace, bool include_steps);

std::string tau_decimal(const Rat& ratio, int n);

}  // namespace wrlat
