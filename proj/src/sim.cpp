#include "congest/sim.hpp"

#include <algorithm>
#include <unordered_map>

#include "congest/errors.hpp"

namespace congest {

Inbox local_exchange(const Graph& g, const Outbox& outbox, RoundLedger& ledger,
                     const Config& cfg, const std::string& label) {
    if (static_cast<int>(outbox.size()) > g.node_count())
        throw InputError("local_exchange: outbox larger than node count");

    // per-edge, per-direction queue lengths (B caps each direction separately)
    std::map<std::pair<int, int>, long long> edge_load;
    long long total = 0;
    for (int v = 0; v < static_cast<int>(outbox.size()); ++v) {
        for (const auto& [to, msg] : outbox[v]) {
            if (!g.has_edge(v, to))
                throw InputError("local_exchange: message addressed along non-edge " +
                                 std::to_string(v) + "-" + std::to_string(to));
            if (msg.size() > cfg.W)
                throw ProtocolViolation("local_exchange: message of " +
                                        std::to_string(msg.size()) + " words exceeds budget W=" +
                                        std::to_string(cfg.W));
            ++edge_load[{v, to}];
            ++total;
        }
    }

    long long max_load = 0;
    for (const auto& [e, l] : edge_load) max_load = std::max(max_load, l);
    const long long rounds = (max_load + cfg.B - 1) / cfg.B;

    // With the queue spread over `rounds` rounds, no edge ever carries more
    // than B messages in one round.
    long long per_round = 0;
    if (rounds > 0) {
        for (const auto& [e, l] : edge_load)
            per_round = std::max(per_round, (l + rounds - 1) / rounds);
        if (per_round > cfg.B)
            throw InvariantFailure("local_exchange: scheduled per-round edge load exceeds B");
    }

    Inbox inbox(g.node_count());
    for (int v = 0; v < static_cast<int>(outbox.size()); ++v)
        for (const auto& [to, msg] : outbox[v]) inbox[to].push_back({v, msg});

    ledger.charge(label, rounds);
    ledger.record_traffic(label, total, total, per_round);
    return inbox;
}

EdgeList exhaustive_neighborhood_learn(const Graph& g, int v, const std::vector<int>& T,
                                       RoundLedger& ledger, const Config& cfg,
                                       const std::string& label) {
    g.check_node(v);
    for (int u : T)
        if (!g.has_edge(v, u))
            throw InputError("exhaustive_neighborhood_learn: T must be a subset of N(v)");
    (void)cfg;

    const long long t = static_cast<long long>(T.size());
    EdgeList learned;
    long long acks = 0;
    std::vector<char> inT(g.node_count(), 0);
    for (int u : T) inT[u] = 1;
    for (int u : T) {
        for (int w : g.neighbors(u)) {
            if (!inT[w]) continue;
            ++acks;
            if (u < w) learned.push_back({u, w});
        }
    }
    std::sort(learned.begin(), learned.end());

    // Pass 1: |T| list messages down each of v's incident edges; pass 2: acks.
    ledger.charge(label, 2 * t);
    const long long broadcast = t * g.degree(v);
    ledger.record_traffic(label, broadcast + acks, broadcast + acks, t > 0 ? 1 : 0);
    return learned;
}

std::map<int, EdgeList> parallel_neighborhood_learn(const Graph& g,
                                                    const std::map<int, std::vector<int>>& requests,
                                                    RoundLedger& ledger, const Config& cfg,
                                                    const std::string& label) {
    std::map<Edge, long long> load1, load2;
    long long total1 = 0, total2 = 0;
    std::map<int, EdgeList> out;

    std::vector<char> inT(g.node_count(), 0);
    for (const auto& [v, T] : requests) {
        g.check_node(v);
        for (int u : T) {
            if (!g.has_edge(v, u))
                throw InputError("parallel_neighborhood_learn: request not within N(v)");
            inT[u] = 1;
        }
        const long long t = static_cast<long long>(T.size());
        // pass 1: v sends its list T along each incident edge
        for (int w : g.neighbors(v)) {
            load1[make_edge(v, w)] += t;
            total1 += t;
        }
        EdgeList learned;
        for (int u : T) {
            long long acks = 0;
            for (int w : g.neighbors(u)) {
                if (!inT[w]) continue;
                ++acks;
                if (u < w) learned.push_back({u, w});
            }
            // pass 2: u acks each adjacent list element back to v
            load2[make_edge(v, u)] += acks;
            total2 += acks;
        }
        std::sort(learned.begin(), learned.end());
        for (int u : T) inT[u] = 0;
        out[v] = std::move(learned);
    }

    long long max1 = 0, max2 = 0;
    for (const auto& [e, l] : load1) max1 = std::max(max1, l);
    for (const auto& [e, l] : load2) max2 = std::max(max2, l);
    const long long rounds =
        (max1 + cfg.B - 1) / cfg.B + (max2 + cfg.B - 1) / cfg.B;
    ledger.charge(label, rounds);
    ledger.record_traffic(label, total1 + total2, total1 + total2,
                          rounds > 0 ? cfg.B : 0);
    return out;
}

long long parallel_compose(const std::vector<std::pair<std::vector<int>, long long>>& phases) {
    std::unordered_map<int, long long> per_node;
    for (const auto& [participants, rounds] : phases)
        for (int v : participants) per_node[v] += rounds;
    long long best = 0;
    for (const auto& [v, c] : per_node) best = std::max(best, c);
    return best;
}

} // namespace congest
