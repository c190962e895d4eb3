#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "congest/config.hpp"
#include "congest/graph.hpp"
#include "congest/ledger.hpp"
#include "congest/rational.hpp"

namespace congest {

struct Clustering {
    std::vector<std::vector<int>> clusters;
    std::vector<EdgeList> intraEdges;
    EdgeList interClusterEdges;
    Rational achievedEpsilon{0};
    Rational achievedPhi{1};               // min certificate over multi-node clusters
    std::vector<Rational> clusterPhi;      // per-cluster certificate (1 for singletons)
    long long chargedRounds = 0;
};

// Recursive sweep-cut refinement: split any part whose loop-mode conductance
// certificate is below targetPhi, moving cut edges to the inter-cluster set.
// Parts with at most kExactConductanceCap nodes are certified exactly.
Clustering decompose(const Graph& g, const std::vector<int>& participants,
                     const Rational& targetPhi, std::uint64_t seed, const Config& cfg,
                     RoundLedger* ledger = nullptr, const std::string& label = "decomp");

struct ValidationReport {
    bool pass = true;
    std::vector<std::string> failures;
    double dilution = 1.0; // max over multi-node-cluster nodes of deg(v)/deg_C(v)
    Rational epsilon{0};
    Rational minPhi{1};
};

ValidationReport validate_decomposition(const Graph& g, const std::vector<int>& participants,
                                        const Clustering& clustering, const Rational& phiTarget,
                                        double epsilonTarget);

nlohmann::json clustering_to_json(const Clustering& c);
Clustering clustering_from_json(const nlohmann::json& j);

} // namespace congest
