#pragma once

#include "braidwalk/group.hpp"

#include <string>

namespace braidwalk {

/// Parses a group spec document. Schema:
///
///   {"family": "cyclic",          "m": 5}
///   {"family": "cyclic_product",  "moduli": [2, 4]}
///   {"family": "dihedral",        "m": 4}
///   {"family": "coxeter_a",       "rank": 3}     (also coxeter_b, coxeter_d)
///   {"family": "coxeter_i2",      "m": 5}
///   {"family": "coxeter_product", "factors": [{...}, {...}]}
///
/// Unknown keys, missing keys and out-of-range values raise InvalidSpec.
GroupSpec parse_group_spec(const std::string& json_text);

std::string group_spec_to_json(const GroupSpec& spec);

}  // namespace braidwalk
