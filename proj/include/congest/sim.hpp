#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "congest/config.hpp"
#include "congest/graph.hpp"
#include "congest/ledger.hpp"

namespace congest {

// One O(log n)-bit message: up to W node-ID words plus a small tag.
struct Message {
    std::vector<int> payload;
    std::uint8_t tag = 0;

    int size() const { return static_cast<int>(payload.size()); }
};

// Per-node outbox: (neighbor, message) pairs addressed along incident edges.
using Outbox = std::vector<std::vector<std::pair<int, Message>>>;
// Per-node inbox: (sender, message) pairs in deterministic delivery order.
using Inbox = std::vector<std::vector<std::pair<int, Message>>>;

// Delivers all queued messages, charging ceil(max per-edge direction-summed
// load / B) rounds under the given phase label.
Inbox local_exchange(const Graph& g, const Outbox& outbox, RoundLedger& ledger,
                     const Config& cfg, const std::string& label);

// v broadcasts the list T along its incident edges and every u in T acks each
// element of T adjacent to it, so v learns all edges of g inside T.
// Charges |T| + |T| rounds.
EdgeList exhaustive_neighborhood_learn(const Graph& g, int v, const std::vector<int>& T,
                                       RoundLedger& ledger, const Config& cfg,
                                       const std::string& label);

// Many nodes running the two-pass learn protocol simultaneously; round cost is
// the true per-edge load of both passes. Returns the learned edge set per node.
std::map<int, EdgeList> parallel_neighborhood_learn(const Graph& g,
                                                    const std::map<int, std::vector<int>>& requests,
                                                    RoundLedger& ledger, const Config& cfg,
                                                    const std::string& label);

// Max over nodes of the summed costs of the phases that node participates in.
long long parallel_compose(const std::vector<std::pair<std::vector<int>, long long>>& phases);

} // namespace congest
