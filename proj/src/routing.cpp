#include "congest/routing.hpp"

#include <algorithm>

#include "congest/errors.hpp"

namespace congest {

namespace {

// L value reported when a node with zero cluster degree carries traffic;
// no finite L satisfies ceil(L * 0) >= count.
const Rational kImpossibleLoad(std::int64_t(1) << 40);

Rational load_of(const ClusterView& cluster, const std::map<int, long long>& counts) {
    Rational best(0);
    for (const auto& [v, c] : counts) {
        if (c == 0) continue;
        if (!cluster.contains(v))
            throw InputError("routing: endpoint " + std::to_string(v) + " not in cluster");
        const int deg = static_cast<int>(cluster.local_neighbors(cluster.local_of(v)).size());
        const Rational l = deg == 0 ? kImpossibleLoad : Rational(c, deg);
        if (best < l) best = l;
    }
    return best;
}

void check_caps(const ClusterView& cluster, const std::map<int, long long>& counts,
                const Rational& L, const char* kind) {
    for (const auto& [v, c] : counts) {
        if (c == 0) continue;
        if (!cluster.contains(v))
            throw InputError("routing: endpoint " + std::to_string(v) + " not in cluster");
        const int deg = static_cast<int>(cluster.local_neighbors(cluster.local_of(v)).size());
        const std::int64_t cap = (L * Rational(deg)).ceil();
        if (c > cap)
            throw ProtocolViolation("routing: node " + std::to_string(v) + " is " + kind +
                                    " of " + std::to_string(c) + " messages, cap " +
                                    std::to_string(cap) + " (deg=" + std::to_string(deg) + ")");
    }
}

void charge(const ClusterView& cluster, const Rational& L, long long total_msgs,
            RoundLedger& ledger, const Config& cfg, const std::string& label,
            const std::string& cluster_key) {
    const int n = cluster.parent().node_count();
    if (ledger.mark_preprocessed(cluster_key))
        ledger.charge("route.pre", Config::route_pre_rounds(n));
    const long long rounds = total_msgs > 0 ? L.ceil() * cfg.route_kappa(n) : 0;
    ledger.charge(label, rounds);
    ledger.record_traffic(label, total_msgs, total_msgs, total_msgs > 0 ? cfg.B : 0);
}

} // namespace

Rational compute_load(const RoutingBatch& batch) {
    if (!batch.cluster) throw InputError("compute_load: missing cluster");
    std::map<int, long long> sent, received;
    for (const auto& m : batch.messages) {
        ++sent[m.src];
        ++received[m.dst];
    }
    const Rational a = load_of(*batch.cluster, sent);
    const Rational b = load_of(*batch.cluster, received);
    return a < b ? b : a;
}

Rational counts_load(const ClusterView& cluster, const std::map<int, long long>& sent,
                     const std::map<int, long long>& received) {
    const Rational a = load_of(cluster, sent);
    const Rational b = load_of(cluster, received);
    return a < b ? b : a;
}

std::map<int, std::vector<Message>> route(const RoutingBatch& batch, RoundLedger& ledger,
                                          const Config& cfg, const std::string& label,
                                          const std::string& cluster_key) {
    if (!batch.cluster) throw InputError("route: missing cluster");
    const ClusterView& cluster = *batch.cluster;

    std::map<int, long long> sent, received;
    for (const auto& m : batch.messages) {
        if (!cluster.contains(m.src) || !cluster.contains(m.dst))
            throw InputError("route: message endpoint outside cluster");
        if (m.payload.size() > cfg.W)
            throw ProtocolViolation("route: message exceeds word budget");
        ++sent[m.src];
        ++received[m.dst];
    }
    check_caps(cluster, sent, batch.L, "source");
    check_caps(cluster, received, batch.L, "destination");

    std::map<int, std::vector<Message>> inbox;
    for (const auto& m : batch.messages) inbox[m.dst].push_back(m.payload);

    charge(cluster, batch.L, static_cast<long long>(batch.messages.size()), ledger, cfg, label,
           cluster_key);
    return inbox;
}

void route_counts(const ClusterView& cluster, const std::map<int, long long>& sent,
                  const std::map<int, long long>& received, const Rational& L,
                  RoundLedger& ledger, const Config& cfg, const std::string& label,
                  const std::string& cluster_key) {
    check_caps(cluster, sent, L, "source");
    check_caps(cluster, received, L, "destination");
    long long total = 0;
    for (const auto& [v, c] : sent) total += c;
    long long totalRecv = 0;
    for (const auto& [v, c] : received) totalRecv += c;
    if (total != totalRecv)
        throw InvariantFailure("route_counts: sent/received totals disagree");
    charge(cluster, L, total, ledger, cfg, label, cluster_key);
}

} // namespace congest
