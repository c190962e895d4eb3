#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "congest/claims.hpp"
#include "congest/config.hpp"
#include "congest/decomp.hpp"
#include "congest/graph.hpp"
#include "congest/ledger.hpp"
#include "congest/listing.hpp"
#include "congest/oracle.hpp"

namespace congest {

// Driver state for the iterative p >= 5 lister: prune, decompose, classify,
// gather cross edges, defer low-average clusters, run the sparsity-aware
// lister per eligible cluster, shrink the residual, repeat.
struct KpIterationState {
    Graph residual;              // current residual graph (full node-ID space)
    int iteration = 0;
    CliqueSet found;
    std::vector<long long> edge_history; // |E| at the start of each iteration
    std::vector<long long> node_history; // active nodes at the start of each iteration
};

class KpLister {
public:
    KpLister(const Graph& g, int p, std::uint64_t seed, const Config& cfg, RoundLedger& ledger,
             ClaimsReport* claims = nullptr);

    // Node v with degree <= 2*sqrt(n) learns its full neighborhood square and
    // lists every p-clique through it; v and its edges are then removed.
    void prune_low_degree(KpIterationState& state);

    // Members of clusters below the beta * n^{1-2/p} size floor learn their
    // full neighborhood squares, list, and are removed with their edges.
    void handle_small_clusters(KpIterationState& state, const Clustering& clustering,
                               std::vector<std::vector<int>>& survivors);

    struct OutsideClassification {
        std::vector<int> sstar; // outside nodes below the degree-ratio threshold
        std::vector<int> heavy; // outside nodes with a cluster edge, not in sstar
        std::vector<int> bad;   // members with > n^{1-2/p} sstar neighbors
    };
    OutsideClassification classify_outside(const KpIterationState& state,
                                           const std::vector<int>& members) const;

    struct GatherResult {
        std::map<int, EdgeList> holdings; // outside-outside edges now held in C
        EdgeList ebar;                    // all boundary edges of C
    };
    GatherResult gather_cross_edges(const KpIterationState& state, const std::vector<int>& members,
                                    const OutsideClassification& cls);

    // True when the cluster's average degree fails either lower bound and its
    // edges must be deferred.
    bool low_average(const KpIterationState& state, const std::vector<int>& members,
                     long long mprime) const;

    CliqueSet run();

private:
    Graph g_;
    int p_;
    std::uint64_t seed_;
    Config cfg_;
    RoundLedger& ledger_;
    ClaimsReport* claims_;
};

CliqueSet kp_list(const Graph& g, int p, std::uint64_t seed, const Config& cfg,
                  RoundLedger& ledger, ClaimsReport* claims = nullptr);

} // namespace congest
