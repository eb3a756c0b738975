#pragma once

#include <string>

#include <json.hpp>

#include "filiform/corpus.hpp"
#include "filiform/invariants.hpp"
#include "filiform/paramlaw.hpp"

namespace filiform {

// Law file: {"dim": n, "brackets": [{"i": i, "j": j, "value": ["p/q", ...]}]}
// with i < j; omitted pairs are zero brackets; duplicate pairs are rejected.
nlohmann::json law_to_json(const StructureConstants& L);
StructureConstants law_from_json(const nlohmann::json& j);
StructureConstants parse_law_text(const std::string& text); // ParseError with position info
std::string law_to_text(const StructureConstants& L);       // canonical, byte-stable

// {"coeffs": [[k, l, c], ...]} sorted lexicographically
nlohmann::json bipoly_json(const BiPoly& p);

nlohmann::json report_json(const Report& r);

nlohmann::json constraints_json(const ConstraintSet& cs);

struct FamilyRequest {
  ParamSpec spec;
  SymbolicValues values;
  bool symbolic = false; // any entry left as an indeterminate
};

// {"z1":..,"z2":..,"n":..,"alpha":[..],"gamma":[..],"beta":{"k,l":..}};
// entries are rational strings, integers, or "sym"; omitted sections are
// fully symbolic.
FamilyRequest request_from_json(const nlohmann::json& j);

// Throws unless every entry is constant.
ParamValues numeric_values(const SymbolicValues& values);

} // namespace filiform
