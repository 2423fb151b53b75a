#pragma once

#include "racgc/graph.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace racgc {

// Θ(n_1,...,n_k): essential vertices "a", "b"; branch i interior "x<i>_<j>".
Graph theta_graph(const std::vector<int>& n);

// Cycle of generalized Θ-graphs: essential vertices "a<i>", component i joins
// a<i> to a<i+1>; branch j of component i has interior "c<i>_<j>_<m>".
Graph cycle_graph(const std::vector<std::vector<int>>& components);

Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

// Accepts "theta:2,2,3", "cycle:[[2,3],[4],[2,2]]", a JSON document, or a path
// to a JSON file.
Graph load_graph(const std::string& spec);

std::vector<int> parse_int_list(const std::string& s);

}  // namespace racgc
