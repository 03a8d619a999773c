#pragma once

// JSON encodings used by the command-line tool.
//
// element:  {"U": [[[re, im] x4] x4], "omega": [[re, im] x4], "iota": x}
// operator: {"degree_cap": N, "dim": d, "entries": [[row, col, re_num, re_den, im_num, im_den], ...]}
// Rationals are carried as decimal strings so large numerators survive.

#include <string>
#include <vector>

#include <json.hpp>

#include "canon/fock_operator.hpp"
#include "canon/group_core.hpp"
#include "canon/verify.hpp"

namespace canon {

using Json = nlohmann::json;

Json complex_to_json(cd z);
cd complex_from_json(const Json& j);
Json c4_to_json(const C4& v);
C4 c4_from_json(const Json& j);

Json element_to_json(const CanonicalElement& g);
/// Throws Error(InvalidElement) when U fails pseudo-unitarity, Error(Parse) on shape errors.
CanonicalElement element_from_json(const Json& j, double tol = kElementTolerance);

Json operator_to_json(const FockOperator& op);
FockOperator operator_from_json(const Json& j);

Json report_to_json(const std::vector<InvariantResult>& results);
std::string report_to_csv(const std::vector<InvariantResult>& results);

/// Parses text, mapping nlohmann errors to Error(Parse) with the byte position.
Json parse_json(const std::string& text);

}  // namespace canon
