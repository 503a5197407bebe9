#include "bisa/jsonschema.hpp"

namespace bisa {

namespace {

using nlohmann::json;

bool matches_type(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  return false;
}

void validate_node(const json& value, const json& schema, const std::string& path,
                   std::vector<std::string>& errors) {
  if (!schema.is_object()) {
    return;  // permissive: "true" schema
  }

  if (auto it = schema.find("type"); it != schema.end()) {
    // Either one type name or a list of alternatives (e.g. nullable).
    bool ok = false;
    std::string expected;
    if (it->is_string()) {
      expected = it->get<std::string>();
      ok = matches_type(value, expected);
    } else {
      for (const json& alt : *it) {
        expected += (expected.empty() ? "" : "|") + alt.get<std::string>();
        ok = ok || matches_type(value, alt.get<std::string>());
      }
    }
    if (!ok) {
      errors.push_back(path + ": expected " + expected + ", got " +
                       std::string(value.type_name()));
      return;  // further keyword checks assume the right type
    }
  }

  if (auto it = schema.find("enum"); it != schema.end()) {
    bool found = false;
    for (const json& candidate : *it) {
      if (candidate == value) {
        found = true;
        break;
      }
    }
    if (!found) {
      errors.push_back(path + ": value not in the allowed set");
    }
  }

  if (value.is_number()) {
    const double number = value.get<double>();
    if (auto it = schema.find("minimum"); it != schema.end() && number < it->get<double>()) {
      errors.push_back(path + ": below minimum " + it->dump());
    }
    if (auto it = schema.find("exclusiveMinimum");
        it != schema.end() && number <= it->get<double>()) {
      errors.push_back(path + ": must exceed " + it->dump());
    }
    if (auto it = schema.find("maximum"); it != schema.end() && number > it->get<double>()) {
      errors.push_back(path + ": above maximum " + it->dump());
    }
  }

  if (value.is_object()) {
    const json* properties = nullptr;
    if (auto it = schema.find("properties"); it != schema.end()) {
      properties = &*it;
      for (auto prop = it->begin(); prop != it->end(); ++prop) {
        if (auto member = value.find(prop.key()); member != value.end()) {
          validate_node(*member, prop.value(), path + "/" + prop.key(), errors);
        }
      }
    }
    if (auto it = schema.find("required"); it != schema.end()) {
      for (const json& name : *it) {
        if (!value.contains(name.get<std::string>())) {
          errors.push_back(path + ": missing required key '" + name.get<std::string>() +
                           "'");
        }
      }
    }
    if (auto it = schema.find("additionalProperties"); it != schema.end()) {
      for (auto member = value.begin(); member != value.end(); ++member) {
        const bool declared =
            properties != nullptr && properties->contains(member.key());
        if (declared) {
          continue;
        }
        if (it->is_boolean() && !it->get<bool>()) {
          errors.push_back(path + ": unknown key '" + member.key() + "'");
        } else if (it->is_object()) {
          validate_node(member.value(), *it, path + "/" + member.key(), errors);
        }
      }
    }
  }

  if (value.is_array()) {
    if (auto it = schema.find("minItems");
        it != schema.end() && value.size() < it->get<std::size_t>()) {
      errors.push_back(path + ": fewer than " + it->dump() + " items");
    }
    if (auto it = schema.find("maxItems");
        it != schema.end() && value.size() > it->get<std::size_t>()) {
      errors.push_back(path + ": more than " + it->dump() + " items");
    }
    if (auto it = schema.find("items"); it != schema.end()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        validate_node(value[i], *it, path + "/" + std::to_string(i), errors);
      }
    }
  }
}

}  // namespace

std::vector<std::string> validate_schema(const nlohmann::json& document,
                                         const nlohmann::json& schema) {
  std::vector<std::string> errors;
  validate_node(document, schema, "$", errors);
  return errors;
}

}  // namespace bisa
