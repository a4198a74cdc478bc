#include "qsi/json_io.hpp"

#include <stdexcept>

namespace qsi {

using nlohmann::json;

json quiver_to_json(const Quiver& q) {
    json arrows = json::array();
    for (const Arrow& a : q.arrows())
        arrows.push_back({{"id", a.id}, {"tail", a.tail}, {"head", a.head}});
    return json{{"vertices", q.vertices()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw std::invalid_argument("quiver JSON needs 'vertices' and 'arrows'");
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Arrow> arrows;
    for (const json& a : j.at("arrows")) {
        arrows.push_back(Arrow{a.at("id").get<std::string>(), a.at("tail").get<std::string>(),
                               a.at("head").get<std::string>()});
    }
    return Quiver(std::move(vertices), std::move(arrows));
}

json vertex_map_to_json(const VertexMap& m) {
    json j = json::object();
    for (const auto& [v, val] : m) j[v] = to_ll(val);
    return j;
}

VertexMap vertex_map_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("vertex map JSON must be an object");
    VertexMap m;
    for (const auto& [key, val] : j.items()) m[key] = val.get<long long>();
    return m;
}

json partition_to_json(const Partition& p) {
    return json(p.parts());
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
    return Partition(j.get<std::vector<int>>());
}

json flag_problem_to_json(const FlagProblem& fp) {
    json lambdas = json::array();
    for (const Partition& l : fp.lambdas) lambdas.push_back(partition_to_json(l));
    return json{{"r", fp.r}, {"ell", fp.ell}, {"lambdas", lambdas}};
}

FlagProblem flag_problem_from_json(const json& j) {
    if (!j.is_object() || !j.contains("r") || !j.contains("ell") || !j.contains("lambdas"))
        throw std::invalid_argument("flag problem JSON needs 'r', 'ell', 'lambdas'");
    std::vector<Partition> lambdas;
    for (const json& l : j.at("lambdas")) lambdas.push_back(partition_from_json(l));
    return make_flag_problem(j.at("r").get<int>(), j.at("ell").get<int>(), std::move(lambdas));
}

} // namespace qsi
