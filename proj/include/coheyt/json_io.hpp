#pragma once

#include <json.hpp>

#include "coheyt/extension.hpp"

namespace coheyt {

using json = nlohmann::ordered_json;

// poset files: {"elements": ["a","b"], "covers": [["a","b"]]}
poset_ptr poset_from_json(const json& j);
json poset_to_json(const poset& p);

// lattice tables: {"size": n, "leq": [[bool,...],...]}
lattice_table table_from_json(const json& j);

// elements are sorted name arrays, e.g. ["c","x1"]
downset element_from_json(const poset_ptr& p, const json& j);
json element_to_json(const downset& d);

// signatures: {"g": [names], "h": [[names],[names]], "r": 1|2}
signature signature_from_json(const poset_ptr& p, const json& j);
json signature_to_json(const signature& s);

json embedding_to_json(const embedding& e);

json load_json_file(const std::string& path);

}
