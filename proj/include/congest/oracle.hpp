#pragma once

#include <set>
#include <vector>

#include "congest/graph.hpp"

namespace congest {

// Canonical clique collection: strictly increasing node-ID tuples.
using CliqueSet = std::set<std::vector<int>>;

inline constexpr int kOracleNodeCap = 450;

// All p-cliques of g, via degeneracy-ordered extension. Reference truth for
// every listing algorithm in the repo.
CliqueSet enumerate_cliques(const Graph& g, int p);

// Plain p-nested-loop enumeration; only for cross-validating the oracle on
// tiny graphs (n <= 25).
CliqueSet enumerate_cliques_naive(const Graph& g, int p);

// Qualifying p-tuples for a split instance: p' nodes inside `inside` pairwise
// connected by edges of ec, p - p' outside nodes pairwise connected by eprime,
// and all cross pairs in ebar. Node IDs >= n (virtual padding) never qualify.
CliqueSet qualifying_cliques(int n, const std::vector<int>& inside, const EdgeList& ec,
                             const EdgeList& ebar, const EdgeList& eprime, int p, int pprime);

// All p-cliques containing v, given v's neighbor list T and the edges among T
// that v has learned. Local-knowledge enumeration for exhaustive-search nodes.
CliqueSet cliques_containing(int v, const std::vector<int>& T, const EdgeList& learned, int p);

} // namespace congest
