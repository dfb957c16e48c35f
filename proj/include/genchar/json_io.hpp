#pragma once

#include <json.hpp>

#include "genchar/poly.hpp"

namespace genchar {

using Json = nlohmann::ordered_json;

// Wire format: array of terms, each {"coeff": "p/q", "monomial": {"x1": 2}},
// sorted in the canonical monomial order. Round-trips bit-exactly.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

std::string poly_to_json_string(const Poly& p);
Poly poly_from_json_string(const std::string& s);

} // namespace genchar
