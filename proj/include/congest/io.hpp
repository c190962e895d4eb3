#pragma once

#include <string>

#include <json.hpp>

#include "congest/graph.hpp"

namespace congest {

// Edge-list text: one "u v" pair per line, 0-based IDs, '#' comments.
// n is taken as 1 + max node ID unless a "# n=<count>" comment is present.
Graph read_edge_list(const std::string& path);
void write_edge_list(const Graph& g, const std::string& path);

// JSON variant with an explicit node count and free-form metadata.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g, const nlohmann::json& metadata = {});
Graph read_graph_json(const std::string& path);
void write_graph_json(const Graph& g, const std::string& path,
                      const nlohmann::json& metadata = {});

} // namespace congest
