#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace bisa {

// Validates `document` against a JSON-Schema-style description. Supported
// keywords: type (name or list of alternatives), properties, required,
// additionalProperties (bool or schema), items (single schema), enum,
// minimum, exclusiveMinimum, maximum, minItems, maxItems. Returns one
// "<path>: <problem>" line per violation; empty means valid.
std::vector<std::string> validate_schema(const nlohmann::json& document,
                                         const nlohmann::json& schema);

}  // namespace bisa
