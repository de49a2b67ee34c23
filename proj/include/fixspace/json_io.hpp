#ifndef FIXSPACE_JSON_IO_HPP
#define FIXSPACE_JSON_IO_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixspace/action.hpp"
#include "fixspace/exact.hpp"
#include "fixspace/function_space.hpp"
#include "fixspace/group.hpp"
#include "fixspace/res_ind.hpp"

namespace fixspace::json_io {

// Input is read with the sorted-key json type; reports are built with
// ordered_json so that keys appear in a fixed, documented order.
using Json = nlohmann::json;
using Report = nlohmann::ordered_json;

// Malformed input of any kind surfaces as Error{"ParseError"}.
Json parse_text(const std::string& text);
Json read_file(const std::string& path);

// Scalars are written as ["re","im"] with each part "p" or "p/q". Input also
// accepts a bare string or an integer for a real value.
Report scalar_to_json(const GaussianRational& z);
GaussianRational scalar_from_json(const Json& j);
Report scalars_to_json(const std::vector<GaussianRational>& values);

FiniteGroup group_from_json(const Json& j, std::size_t cap);
Report group_to_json(const FiniteGroup& g);

// {"group": ..., "degree": n, "act": [[...]]} or {"group": ..., "kind": "evaluation"}.
GroupAction action_from_json(const Json& j, std::size_t cap);
Report action_to_json(const GroupAction& act);

bool is_action_document(const Json& j);

FunctionOnX function_from_json(const Json& j, std::size_t degree);
Report function_to_json(const FunctionOnX& f);

// {"subset": [...], "values": [...]}.
bool has_subset(const Json& j);
FunctionOnY function_on_subset_from_json(const Json& j, const GroupAction& act);
FunctionOnY function_on_subset_from_json(const Json& j, const InvariantSubset& y);

Partition partition_from_json(const Json& j);
Report partition_to_json(const Partition& p);

std::vector<std::size_t> parse_index_list(const std::string& text, const std::string& what);

}  // namespace fixspace::json_io

#endif  // FIXSPACE_JSON_IO_HPP
