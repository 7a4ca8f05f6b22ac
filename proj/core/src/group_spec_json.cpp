#include "braidwalk/group_spec_json.hpp"

#include <json.hpp>

#include <set>

namespace braidwalk {

namespace {

using nlohmann::json;

struct FamilyName {
  const char* name;
  Family family;
  const char* parameter_key;  // nullptr for list-valued families
};

constexpr FamilyName kFamilies[] = {
    {"cyclic", Family::Cyclic, "m"},
    {"cyclic_product", Family::CyclicProduct, nullptr},
    {"dihedral", Family::Dihedral, "m"},
    {"coxeter_a", Family::CoxeterA, "rank"},
    {"coxeter_b", Family::CoxeterB, "rank"},
    {"coxeter_d", Family::CoxeterD, "rank"},
    {"coxeter_i2", Family::CoxeterI2, "m"},
    {"coxeter_product", Family::CoxeterProduct, nullptr},
};

int as_int(const json& value, const std::string& key) {
  if (!value.is_number_integer()) throw InvalidSpec("group spec: '" + key + "' must be an integer");
  const auto v = value.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw InvalidSpec("group spec: '" + key + "' out of range");
  return static_cast<int>(v);
}

GroupSpec from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidSpec("group spec must be a JSON object");
  if (!doc.contains("family") || !doc["family"].is_string())
    throw InvalidSpec("group spec: missing string key 'family'");
  const auto family_name = doc["family"].get<std::string>();

  const FamilyName* entry = nullptr;
  for (const auto& f : kFamilies)
    if (family_name == f.name) entry = &f;
  if (!entry) throw InvalidSpec("group spec: unknown family '" + family_name + "'");

  std::set<std::string> allowed = {"family"};
  GroupSpec spec;
  spec.family = entry->family;
  if (entry->parameter_key) {
    allowed.insert(entry->parameter_key);
    if (!doc.contains(entry->parameter_key))
      throw InvalidSpec("group spec: family '" + family_name + "' needs '" + entry->parameter_key + "'");
    spec.parameter = as_int(doc[entry->parameter_key], entry->parameter_key);
  } else if (entry->family == Family::CyclicProduct) {
    spec.parameter = 0;
    allowed.insert("moduli");
    if (!doc.contains("moduli") || !doc["moduli"].is_array())
      throw InvalidSpec("group spec: cyclic_product needs an array 'moduli'");
    for (const auto& m : doc["moduli"]) spec.moduli.push_back(as_int(m, "moduli"));
  } else {
    spec.parameter = 0;
    allowed.insert("factors");
    if (!doc.contains("factors") || !doc["factors"].is_array())
      throw InvalidSpec("group spec: coxeter_product needs an array 'factors'");
    for (const auto& f : doc["factors"]) spec.factors.push_back(from_json(f));
  }
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key)) throw InvalidSpec("group spec: unknown key '" + key + "'");
  }
  spec.validate();
  return spec;
}

json to_json(const GroupSpec& spec) {
  for (const auto& f : kFamilies) {
    if (f.family != spec.family) continue;
    json doc = {{"family", f.name}};
    if (f.parameter_key) {
      doc[f.parameter_key] = spec.parameter;
    } else if (spec.family == Family::CyclicProduct) {
      doc["moduli"] = spec.moduli;
    } else {
      doc["factors"] = json::array();
      for (const auto& factor : spec.factors) doc["factors"].push_back(to_json(factor));
    }
    return doc;
  }
  return json::object();
}

}  // namespace

GroupSpec parse_group_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidSpec(std::string("group spec: malformed JSON: ") + e.what());
  }
  return from_json(doc);
}

std::string group_spec_to_json(const GroupSpec& spec) { return to_json(spec).dump(); }

}  // namespace braidwalk
