#pragma once

#include "qsi/flag.hpp"
#include "qsi/quiver.hpp"

#include "json.hpp"

#include <string>

namespace qsi {

// {"vertices": ["v1", ...],
//  "arrows": [{"id": "a1", "tail": "v1", "head": "v2"}, ...]}
nlohmann::json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

// {"v1": 1, "v2": 1}
nlohmann::json vertex_map_to_json(const VertexMap& m);
VertexMap vertex_map_from_json(const nlohmann::json& j);

// [5, 2, 1]
nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

// {"r": 4, "ell": 5, "lambdas": [[5,2,1],[4,2],[4,2]]}
nlohmann::json flag_problem_to_json(const FlagProblem& fp);
FlagProblem flag_problem_from_json(const nlohmann::json& j);

} // namespace qsi
