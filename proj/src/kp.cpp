#include "congest/kp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "congest/errors.hpp"
#include "congest/rng.hpp"
#include "congest/sim.hpp"

namespace congest {

KpLister::KpLister(const Graph& g, int p, std::uint64_t seed, const Config& cfg,
                   RoundLedger& ledger, ClaimsReport* claims)
    : g_(g), p_(p), seed_(seed), cfg_(cfg), ledger_(ledger), claims_(claims) {
    if (p < 5) throw InputError("KpLister: this driver handles p >= 5 only");
}

void KpLister::prune_low_degree(KpIterationState& state) {
    const Graph& cur = state.residual;
    const double thr = 2.0 * std::sqrt(static_cast<double>(g_.node_count()));
    const std::vector<int> active = cur.active_nodes();
    const double mu = active.empty()
                          ? 0.0
                          : 2.0 * static_cast<double>(cur.edge_count()) / active.size();

    std::map<int, std::vector<int>> requests;
    for (int v : active)
        if (cur.degree(v) <= thr) requests[v] = cur.neighbors(v);
    if (claims_) {
        const bool applicable = !active.empty() && mu < std::sqrt(g_.node_count());
        claims_->add("prune removes half the nodes when avg degree < sqrt(n)",
                     static_cast<double>(requests.size()),
                     static_cast<double>(active.size()) / 2.0,
                     2 * requests.size() >= active.size(), applicable,
                     "iteration " + std::to_string(state.iteration));
    }
    if (requests.empty()) return;

    const auto learned = parallel_neighborhood_learn(cur, requests, ledger_, cfg_, "kp.prune");
    std::vector<int> gone;
    for (const auto& [v, T] : requests) {
        const auto it = learned.find(v);
        const CliqueSet cs =
            cliques_containing(v, T, it == learned.end() ? EdgeList{} : it->second, p_);
        state.found.insert(cs.begin(), cs.end());
        gone.push_back(v);
    }
    state.residual = remove_nodes(cur, gone);
}

void KpLister::handle_small_clusters(KpIterationState& state, const Clustering& clustering,
                                     std::vector<std::vector<int>>& survivors) {
    const Graph& cur = state.residual;
    const double floor = cfg_.beta * Config::frac_threshold(g_.node_count(), p_);
    std::map<int, std::vector<int>> requests;
    survivors.clear();
    for (const auto& c : clustering.clusters) {
        if (static_cast<double>(c.size()) >= floor) {
            survivors.push_back(c);
            continue;
        }
        for (int v : c)
            if (cur.degree(v) > 0) requests[v] = cur.neighbors(v);
    }
    if (requests.empty()) return;

    const auto learned = parallel_neighborhood_learn(cur, requests, ledger_, cfg_, "kp.small");
    std::vector<int> gone;
    for (const auto& [v, T] : requests) {
        const auto it = learned.find(v);
        const CliqueSet cs =
            cliques_containing(v, T, it == learned.end() ? EdgeList{} : it->second, p_);
        state.found.insert(cs.begin(), cs.end());
        gone.push_back(v);
    }
    state.residual = remove_nodes(cur, gone);
}

KpLister::OutsideClassification KpLister::classify_outside(const KpIterationState& state,
                                                           const std::vector<int>& members) const {
    const Graph& cur = state.residual;
    const double thr = Config::frac_threshold(g_.node_count(), p_);
    std::set<int> in(members.begin(), members.end());

    OutsideClassification cls;
    std::set<int> sstarSet;
    std::set<int> outside;
    for (int v : members)
        for (int u : cur.neighbors(v))
            if (!in.count(u)) outside.insert(u);
    for (int u : outside) {
        int degC = 0;
        for (int w : cur.neighbors(u)) degC += in.count(w) > 0;
        const int degOut = cur.degree(u) - degC;
        if (degC >= 1 && static_cast<double>(degC) * thr < static_cast<double>(degOut)) {
            cls.sstar.push_back(u);
            sstarSet.insert(u);
        } else if (degC >= 1) {
            cls.heavy.push_back(u);
        }
    }
    for (int v : members) {
        int degS = 0;
        for (int u : cur.neighbors(v)) degS += sstarSet.count(u) > 0;
        if (static_cast<double>(degS) > thr) cls.bad.push_back(v);
    }
    return cls;
}

KpLister::GatherResult KpLister::gather_cross_edges(const KpIterationState& state,
                                                    const std::vector<int>& members,
                                                    const OutsideClassification& cls) {
    const Graph& cur = state.residual;
    const double thr = Config::frac_threshold(g_.node_count(), p_);
    std::set<int> in(members.begin(), members.end());
    std::set<int> sstarSet(cls.sstar.begin(), cls.sstar.end());
    std::set<int> badSet(cls.bad.begin(), cls.bad.end());

    GatherResult out;
    for (const auto& [u, v] : cur.edges()) {
        const bool iu = in.count(u) > 0, iv = in.count(v) > 0;
        if (iu != iv) out.ebar.push_back({u, v});
    }

    // heavy outside nodes ship their outside-incident edges in balanced
    // chunks across their cluster neighbors
    long long shipTotal = 0, maxChunk = 0;
    const long long chunkUnit = std::max<long long>(1, static_cast<long long>(thr));
    for (int u : cls.heavy) {
        EdgeList mine;
        std::vector<int> cnbrs;
        for (int w : cur.neighbors(u)) {
            if (in.count(w))
                cnbrs.push_back(w);
            else
                mine.push_back(make_edge(u, w));
        }
        if (mine.empty()) continue;
        std::sort(mine.begin(), mine.end());
        std::sort(cnbrs.begin(), cnbrs.end());
        const long long cnt = static_cast<long long>(mine.size());
        long long chunks = std::min<long long>(static_cast<long long>(cnbrs.size()),
                                               (cnt + chunkUnit - 1) / chunkUnit);
        if (chunks <= 0)
            throw InvariantFailure("gather: heavy node " + std::to_string(u) +
                                   " lost its cluster neighbors");
        const long long maxSize = (cnt + chunks - 1) / chunks;
        if (static_cast<double>(maxSize) > std::ceil(thr))
            throw InvariantFailure("gather: chunk size for heavy node " + std::to_string(u) +
                                   " exceeds the threshold, contradicting heaviness");
        maxChunk = std::max(maxChunk, maxSize);
        shipTotal += cnt;
        for (long long i = 0; i < cnt; ++i)
            out.holdings[cnbrs[static_cast<std::size_t>(i / maxSize)]].push_back(
                mine[static_cast<std::size_t>(i)]);
    }
    if (shipTotal > 0) {
        ledger_.charge("kp.gather", maxChunk);
        ledger_.record_traffic("kp.gather", shipTotal, shipTotal, maxChunk);
    }

    // non-bad members exhaustively learn the edge square of their sstar
    // neighborhoods
    std::map<int, std::vector<int>> requests;
    for (int v : members) {
        if (badSet.count(v)) continue;
        std::vector<int> t;
        for (int u : cur.neighbors(v))
            if (sstarSet.count(u)) t.push_back(u);
        if (!t.empty()) requests[v] = std::move(t);
    }
    if (!requests.empty()) {
        const auto learned = parallel_neighborhood_learn(cur, requests, ledger_, cfg_, "kp.gather");
        for (const auto& [v, edges] : learned)
            if (!edges.empty()) {
                auto& h = out.holdings[v];
                h.insert(h.end(), edges.begin(), edges.end());
            }
    }
    for (auto& [v, h] : out.holdings) {
        std::sort(h.begin(), h.end());
        h.erase(std::unique(h.begin(), h.end()), h.end());
    }
    return out;
}

bool KpLister::low_average(const KpIterationState& state, const std::vector<int>& members,
                           long long mprime) const {
    const Graph& cur = state.residual;
    std::set<int> in(members.begin(), members.end());
    long long mc = 0;
    for (const auto& [u, v] : cur.edges()) mc += in.count(u) && in.count(v);
    const double avg = static_cast<double>(mc) / static_cast<double>(members.size());
    const double n = g_.node_count();
    return avg <= static_cast<double>(mprime) / (cfg_.gamma * n) ||
           avg < std::sqrt(n) / cfg_.gamma_prime;
}

CliqueSet KpLister::run() {
    KpIterationState state;
    state.residual = g_;
    const long long m0 = g_.edge_count();
    const long long iterCap =
        4 * static_cast<long long>(std::ceil(std::log2(std::max<long long>(m0, 2))));
    const int n = g_.node_count();
    const double sizeFloor = cfg_.beta * Config::frac_threshold(n, p_);

    while (state.residual.edge_count() > 0) {
        if (state.iteration >= iterCap) {
            std::string hist;
            for (std::size_t i = 0; i < state.edge_history.size(); ++i)
                hist += (i ? "," : "") + std::to_string(state.edge_history[i]);
            throw InvariantFailure("kp run: iteration bound " + std::to_string(iterCap) +
                                   " exceeded; residual edge history: " + hist);
        }
        state.edge_history.push_back(state.residual.edge_count());
        state.node_history.push_back(
            static_cast<long long>(state.residual.active_nodes().size()));

        prune_low_degree(state);
        if (state.residual.edge_count() == 0) break;

        const std::vector<int> active = state.residual.active_nodes();
        const double l = Config::log2n(n);
        const Rational phi = cfg_.phi_override > 0
                                 ? Rational(static_cast<std::int64_t>(cfg_.phi_override * 1e6), 1000000)
                                 : Rational(1, std::max<std::int64_t>(1, std::llround(l * l)));
        const Clustering clustering =
            decompose(state.residual, active, phi,
                      mix64(seed_, 0x4b70, static_cast<std::uint64_t>(state.iteration)), cfg_,
                      &ledger_, "kp.decomp");

        std::vector<std::vector<int>> survivors;
        handle_small_clusters(state, clustering, survivors);

        const long long mNow = state.residual.edge_count();
        const std::vector<int> activeNow = state.residual.active_nodes();
        const double muNow = activeNow.empty()
                                 ? 0.0
                                 : 2.0 * static_cast<double>(mNow) / activeNow.size();

        long long sumBadSq = 0, elow = 0;
        std::set<Edge> kept(state.residual.edges().begin(), state.residual.edges().end());
        std::vector<std::pair<std::vector<int>, long long>> phases;
        long long trafficSent = 0, trafficRecv = 0, trafficLoad = 0;
        std::size_t ci = 0;
        for (const auto& members : survivors) {
            ++ci;
            const OutsideClassification cls = classify_outside(state, members);
            sumBadSq += static_cast<long long>(cls.bad.size()) * cls.bad.size();
            GatherResult gathered = gather_cross_edges(state, members, cls);

            EdgeList ec;
            std::set<int> in(members.begin(), members.end());
            for (const auto& [u, v] : state.residual.edges())
                if (in.count(u) && in.count(v)) ec.push_back({u, v});
            long long mprime = 0;
            {
                std::set<Edge> uniq;
                for (const auto& [v, h] : gathered.holdings) uniq.insert(h.begin(), h.end());
                mprime = static_cast<long long>(uniq.size());
            }
            if (low_average(state, members, mprime)) {
                elow += static_cast<long long>(ec.size());
                continue;
            }

            ListingInstance inst = make_instance(n, members, ec, gathered.ebar,
                                                 gathered.holdings, p_, cfg_);
            RoundLedger sub;
            SparseLister lister(std::move(inst), cfg_, sub, mix64(seed_, 0x4b71, ci),
                                "kp.i" + std::to_string(state.iteration) + ".c" +
                                    std::to_string(ci));
            const SparseOutcome got = lister.list_all(AvgVariant::Full);
            state.found.insert(got.cliques.begin(), got.cliques.end());
            phases.push_back({members, sub.total_rounds()});
            for (const auto& [lbl, st] : sub.phases()) {
                trafficSent += st.msgs_sent;
                trafficRecv += st.msgs_received;
                trafficLoad = std::max(trafficLoad, st.max_edge_load);
            }

            // listed: remove every cluster edge outside the bad-node square
            std::set<int> badSet(cls.bad.begin(), cls.bad.end());
            for (const auto& e : ec)
                if (!(badSet.count(e.first) && badSet.count(e.second))) kept.erase(e);
        }
        if (!phases.empty()) {
            ledger_.charge("kp.list", parallel_compose(phases));
            ledger_.record_traffic("kp.list", trafficSent, trafficRecv, trafficLoad);
        }
        if (claims_) {
            claims_->add("sum of squared bad-node-set sizes <= (4/beta)|E|",
                         static_cast<double>(sumBadSq), (4.0 / cfg_.beta) * mNow,
                         static_cast<double>(sumBadSq) <= (4.0 / cfg_.beta) * mNow,
                         !survivors.empty() &&
                             std::any_of(survivors.begin(), survivors.end(),
                                         [&](const auto& c) {
                                             return static_cast<double>(c.size()) >= sizeFloor;
                                         }),
                         "iteration " + std::to_string(state.iteration));
            claims_->add("deferred low-average edges <= (1/gamma + 1/gamma')|E|",
                         static_cast<double>(elow),
                         (1.0 / cfg_.gamma + 1.0 / cfg_.gamma_prime) * mNow,
                         static_cast<double>(elow) <=
                             (1.0 / cfg_.gamma + 1.0 / cfg_.gamma_prime) * mNow,
                         muNow >= std::sqrt(static_cast<double>(n)),
                         "iteration " + std::to_string(state.iteration));
        }

        state.residual = Graph(n, EdgeList(kept.begin(), kept.end()));
        ++state.iteration;
    }
    return state.found;
}

CliqueSet kp_list(const Graph& g, int p, std::uint64_t seed, const Config& cfg,
                  RoundLedger& ledger, ClaimsReport* claims) {
    KpLister lister(g, p, seed, cfg, ledger, claims);
    return lister.run();
}

} // namespace congest
