#pragma once

#include <map>
#include <string>
#include <vector>

#include "congest/config.hpp"
#include "congest/graph.hpp"
#include "congest/ledger.hpp"
#include "congest/rational.hpp"
#include "congest/sim.hpp"

namespace congest {

// Point-to-point delivery inside one low-mixing-time cluster. Delivery is
// logically ideal; the checkable content is the per-node load precondition
// (#src(v), #dst(v) <= ceil(L * deg_C(v))) and the charged cost
// ceil(L) * kappa_route(n), plus a one-time preprocessing charge per cluster.
struct RoutingBatch {
    const ClusterView* cluster = nullptr;
    struct Msg {
        int src;
        int dst;
        Message payload;
    };
    std::vector<Msg> messages;
    Rational L{1};
};

// Smallest L such that the batch load invariants hold.
Rational compute_load(const RoutingBatch& batch);

std::map<int, std::vector<Message>> route(const RoutingBatch& batch, RoundLedger& ledger,
                                          const Config& cfg, const std::string& label,
                                          const std::string& cluster_key);

// Aggregated variant: same load checks and charges, driven by per-node
// send/receive counts instead of materialized messages. Used by phases whose
// traffic is fully determined by counts.
void route_counts(const ClusterView& cluster, const std::map<int, long long>& sent,
                  const std::map<int, long long>& received, const Rational& L,
                  RoundLedger& ledger, const Config& cfg, const std::string& label,
                  const std::string& cluster_key);

Rational counts_load(const ClusterView& cluster, const std::map<int, long long>& sent,
                     const std::map<int, long long>& received);

} // namespace congest
