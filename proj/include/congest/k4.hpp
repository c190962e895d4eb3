#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "congest/claims.hpp"
#include "congest/config.hpp"
#include "congest/decomp.hpp"
#include "congest/graph.hpp"
#include "congest/ledger.hpp"
#include "congest/oracle.hpp"

namespace congest {

// Complete edge cover by low-conductance-free clusters: the level-0 clusters
// plus recursive decompositions of the inter-cluster edges. Level-0 clusters
// that survive the size floor form the receiver set for the cross protocol.
struct CoverCluster {
    std::vector<int> members;
    EdgeList edges; // the cover edges assigned to this cluster at its level
    int level = 0;
};

struct Cover {
    std::vector<CoverCluster> all;  // every cluster of the cover
    std::vector<std::size_t> top;   // indices of the level-0 receiver clusters
    int depth = 0;
};

class K4Lister {
public:
    K4Lister(const Graph& g, std::uint64_t seed, const Config& cfg, RoundLedger& ledger,
             ClaimsReport* claims = nullptr);

    // Recursively decomposes the inter-cluster edges until every edge of the
    // given residual is covered; the last level falls back to connected
    // components so the cover is always complete.
    Cover build_cover(const Graph& residual, const std::vector<std::vector<int>>& topClusters,
                      const EdgeList& topIntra, const EdgeList& interEdges);

    struct CrossSets {
        std::vector<int> sstar_in; // nodes of C* shipping-eligible toward C
        std::vector<int> bad;      // nodes of C with too many sstar_in neighbors
    };
    CrossSets cross_sets(const Graph& residual, const CoverCluster& c,
                         const CoverCluster& cstar) const;

    CliqueSet run();

private:
    Graph g_;
    std::uint64_t seed_;
    Config cfg_;
    RoundLedger& ledger_;
    ClaimsReport* claims_;
};

CliqueSet k4_list(const Graph& g, std::uint64_t seed, const Config& cfg, RoundLedger& ledger,
                  ClaimsReport* claims = nullptr);

} // namespace congest
