#pragma once

// Code descriptor documents: {"p": 3, "n": 2, "g1": "x+2", "g2": "x^2+1", "g3": "1"}.

#include <string>
#include <string_view>

#include <json.hpp>

#include "constacyclic/codes.hpp"

namespace constacyclic {

/// Fields in the fixed order p, n, g1, g2, g3.
nlohmann::ordered_json to_descriptor(const ConstaCode& code);
std::string serialize_descriptor(const ConstaCode& code);

/// Throws ParseError for malformed documents; construction errors propagate.
ConstaCode from_descriptor(const nlohmann::ordered_json& doc);
ConstaCode parse_descriptor(std::string_view text);

}  // namespace constacyclic
