#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "congest/graph.hpp"

namespace congest {

struct GeneratedGraph {
    Graph graph;
    std::vector<std::vector<int>> planted; // planted clique node sets, if any
    std::string family;
};

Graph gen_erdos_renyi(int n, double p_edge, std::uint64_t seed);
Graph gen_random_regular(int n, int d, std::uint64_t seed);
Graph gen_cycle(int n);
Graph gen_complete(int n);
// two cliques of size n/2 joined by a single edge
Graph gen_barbell(int n);
// two d-regular-ish random expanders on n/2 nodes each, joined by `bridges`
// random cross edges
Graph gen_two_expanders_bridged(int n, double p_edge, int bridges, std::uint64_t seed);
// Erdos-Renyi base plus `count` planted cliques of size `size` on random
// disjoint-ish node sets; the planted sets are reported for spot checks
GeneratedGraph gen_planted_clique_overlay(int n, double p_edge, int count, int size,
                                          std::uint64_t seed);

// Unified entry point used by the CLI. Parameters not used by a family are
// ignored; unknown family -> InputError.
GeneratedGraph generate(const std::string& family, int n,
                        const std::map<std::string, double>& params, std::uint64_t seed);

} // namespace congest
