#include "congest/io.hpp"

#include <fstream>
#include <sstream>

#include "congest/errors.hpp"

namespace congest {

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("read_edge_list: cannot open " + path);
    EdgeList edges;
    int n = 0;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            const auto eq = line.find("n=", hash);
            if (eq != std::string::npos) n = std::max(n, std::stoi(line.substr(eq + 2)));
            line = line.substr(0, hash);
        }
        std::istringstream ss(line);
        int u, v;
        if (ss >> u >> v) {
            edges.push_back(make_edge(u, v));
            n = std::max({n, u + 1, v + 1});
        }
    }
    return Graph(n, std::move(edges));
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("write_edge_list: cannot open " + path);
    out << "# n=" << g.node_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph graph_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    EdgeList edges;
    for (const auto& e : j.at("edges"))
        edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
    return Graph(n, std::move(edges));
}

nlohmann::json graph_to_json(const Graph& g, const nlohmann::json& metadata) {
    nlohmann::json j;
    j["n"] = g.node_count();
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    if (!metadata.is_null() && !metadata.empty()) j["metadata"] = metadata;
    return j;
}

Graph read_graph_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("read_graph_json: cannot open " + path);
    nlohmann::json j;
    in >> j;
    return graph_from_json(j);
}

void write_graph_json(const Graph& g, const std::string& path, const nlohmann::json& metadata) {
    std::ofstream out(path);
    if (!out) throw InputError("write_graph_json: cannot open " + path);
    out << graph_to_json(g, metadata).dump(2) << "\n";
}

} // namespace congest
