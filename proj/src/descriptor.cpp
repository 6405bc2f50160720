#include "constacyclic/descriptor.hpp"

#include "constacyclic/errors.hpp"

namespace constacyclic {

nlohmann::ordered_json to_descriptor(const ConstaCode& code) {
  nlohmann::ordered_json doc;
  doc["p"] = code.field().modulus();
  doc["n"] = code.length();
  doc["g1"] = to_string(code.g1());
  doc["g2"] = to_string(code.g2());
  doc["g3"] = to_string(code.g3());
  return doc;
}

std::string serialize_descriptor(const ConstaCode& code) { return to_descriptor(code).dump(); }

ConstaCode from_descriptor(const nlohmann::ordered_json& doc) {
  if (!doc.is_object()) throw ParseError("code descriptor must be a JSON object");
  for (const char* key : {"p", "n", "g1", "g2", "g3"}) {
    if (!doc.contains(key)) throw ParseError(std::string("code descriptor is missing field '") + key + "'");
  }
  if (!doc["p"].is_number_unsigned() || !doc["n"].is_number_unsigned()) {
    throw ParseError("descriptor fields p and n must be non-negative integers");
  }
  for (const char* key : {"g1", "g2", "g3"}) {
    if (!doc[key].is_string()) throw ParseError(std::string("descriptor field '") + key + "' must be a string");
  }
  PrimeField field(doc["p"].get<std::uint64_t>());
  auto n = doc["n"].get<std::size_t>();
  return code_from_generators(field, n, parse_fp_poly(field, doc["g1"].get<std::string>()),
                              parse_fp_poly(field, doc["g2"].get<std::string>()),
                              parse_fp_poly(field, doc["g3"].get<std::string>()));
}

ConstaCode parse_descriptor(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid descriptor JSON: ") + e.what());
  }
  return from_descriptor(doc);
}

}  // namespace constacyclic
