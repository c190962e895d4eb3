#include "congest/k4.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "congest/errors.hpp"
#include "congest/listing.hpp"
#include "congest/rng.hpp"
#include "congest/sim.hpp"

namespace congest {

namespace {

Rational phi_rational(const Config& cfg, int n) {
    if (cfg.phi_override > 0)
        return Rational(static_cast<std::int64_t>(cfg.phi_override * 1e6), 1000000);
    const double l = Config::log2n(n);
    return Rational(1, std::max<std::int64_t>(1, std::llround(l * l)));
}

EdgeList edges_inside(const Graph& g, const std::set<int>& in) {
    EdgeList out;
    for (const auto& [u, v] : g.edges())
        if (in.count(u) && in.count(v)) out.push_back({u, v});
    return out;
}

struct WorstRatio {
    double lhs = 0, rhs = 1;
    bool pass = true;
    bool seen = false;
    std::string witness;

    // keep the tightest witness: largest lhs/rhs ratio
    void update(double l, double r, const std::string& w) {
        if (l > r) pass = false;
        if (!seen || l * rhs > lhs * r) {
            lhs = l;
            rhs = r;
            witness = w;
        }
        seen = true;
    }
};

} // namespace

K4Lister::K4Lister(const Graph& g, std::uint64_t seed, const Config& cfg, RoundLedger& ledger,
                   ClaimsReport* claims)
    : g_(g), seed_(seed), cfg_(cfg), ledger_(ledger), claims_(claims) {}

Cover K4Lister::build_cover(const Graph& residual, const std::vector<std::vector<int>>& topClusters,
                            const EdgeList& topIntra, const EdgeList& interEdges) {
    (void)topIntra;
    const int n = residual.node_count();
    Cover cover;
    std::set<int> topMember;
    for (std::size_t i = 0; i < topClusters.size(); ++i) {
        CoverCluster c;
        c.members = topClusters[i];
        std::set<int> in(c.members.begin(), c.members.end());
        c.edges = edges_inside(residual, in);
        c.level = 0;
        cover.top.push_back(cover.all.size());
        cover.all.push_back(std::move(c));
    }

    const int depthCap = static_cast<int>(std::ceil(4.0 * Config::log2n(n)));
    EdgeList remaining = interEdges;
    int level = 1;
    while (!remaining.empty() && level <= depthCap) {
        Graph sub(n, remaining);
        const Clustering cl = decompose(sub, sub.active_nodes(), phi_rational(cfg_, n),
                                        mix64(seed_, 0xc0, static_cast<std::uint64_t>(level)),
                                        cfg_, &ledger_, "k4.cover");
        for (std::size_t i = 0; i < cl.clusters.size(); ++i) {
            if (cl.clusters[i].size() < 2 || cl.intraEdges[i].empty()) continue;
            CoverCluster c;
            c.members = cl.clusters[i];
            c.edges = cl.intraEdges[i];
            c.level = level;
            cover.all.push_back(std::move(c));
        }
        remaining = cl.interClusterEdges;
        ++level;
    }
    if (!remaining.empty()) {
        // completeness fallback: connected components of what is left
        Graph sub(n, remaining);
        std::vector<int> comp(n, -1);
        int nc = 0;
        for (int v : sub.active_nodes()) {
            if (comp[v] >= 0) continue;
            std::vector<int> stack{v};
            comp[v] = nc;
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                for (int y : sub.neighbors(x))
                    if (comp[y] < 0) {
                        comp[y] = nc;
                        stack.push_back(y);
                    }
            }
            ++nc;
        }
        std::vector<CoverCluster> comps(nc);
        for (int v = 0; v < n; ++v)
            if (comp[v] >= 0) comps[comp[v]].members.push_back(v);
        for (const auto& [u, v] : remaining) comps[comp[u]].edges.push_back({u, v});
        for (auto& c : comps) {
            c.level = level;
            cover.all.push_back(std::move(c));
        }
        ++level;
    }
    cover.depth = level; // number of decomposition levels used, including level 0

    // every node appears in at most one cluster per level
    std::map<int, int> overlap;
    for (const auto& c : cover.all)
        for (int v : c.members) ++overlap[v];
    int worst = 0, worstNode = -1;
    for (const auto& [v, cnt] : overlap)
        if (cnt > worst) {
            worst = cnt;
            worstNode = v;
        }
    if (claims_)
        claims_->add("cover overlap per node <= number of cover levels",
                     static_cast<double>(worst), static_cast<double>(cover.depth),
                     worst <= cover.depth, !cover.all.empty(),
                     worstNode >= 0 ? "node " + std::to_string(worstNode) : "");
    return cover;
}

K4Lister::CrossSets K4Lister::cross_sets(const Graph& residual, const CoverCluster& c,
                                         const CoverCluster& cstar) const {
    const double rootN = std::sqrt(static_cast<double>(g_.node_count()));
    std::set<int> inC(c.members.begin(), c.members.end());
    std::map<int, int> degStar; // degree within the cover edges of cstar
    for (const auto& [u, v] : cstar.edges) {
        ++degStar[u];
        ++degStar[v];
    }

    CrossSets out;
    std::set<int> sstarSet;
    for (int u : cstar.members) {
        if (inC.count(u)) continue;
        int degC = 0;
        for (int w : residual.neighbors(u)) degC += inC.count(w) > 0;
        const auto it = degStar.find(u);
        const double ds = it == degStar.end() ? 0.0 : it->second;
        if (degC >= 1 && static_cast<double>(degC) * rootN < ds) {
            out.sstar_in.push_back(u);
            sstarSet.insert(u);
        }
    }
    for (int v : c.members) {
        int degS = 0;
        for (int u : residual.neighbors(v)) degS += sstarSet.count(u) > 0;
        if (static_cast<double>(degS) > rootN) out.bad.push_back(v);
    }
    return out;
}

CliqueSet K4Lister::run() {
    const int n = g_.node_count();
    const int p = 4;
    const double rootN = std::sqrt(static_cast<double>(n));
    const long long m0 = g_.edge_count();
    const long long iterCap =
        4 * static_cast<long long>(std::ceil(std::log2(std::max<long long>(m0, 2))));

    CliqueSet found;
    Graph residual = g_;
    int iteration = 0;
    std::vector<long long> edgeHistory;

    while (residual.edge_count() > 0) {
        if (iteration >= iterCap) {
            std::string hist;
            for (std::size_t i = 0; i < edgeHistory.size(); ++i)
                hist += (i ? "," : "") + std::to_string(edgeHistory[i]);
            throw InvariantFailure("k4 run: iteration bound " + std::to_string(iterCap) +
                                   " exceeded; residual edge history: " + hist);
        }
        edgeHistory.push_back(residual.edge_count());

        // prune low-degree nodes via exhaustive neighborhood learning
        {
            const std::vector<int> active = residual.active_nodes();
            const double mu = active.empty()
                                  ? 0.0
                                  : 2.0 * static_cast<double>(residual.edge_count()) /
                                        active.size();
            std::map<int, std::vector<int>> requests;
            for (int v : active)
                if (residual.degree(v) <= 2.0 * rootN) requests[v] = residual.neighbors(v);
            if (claims_)
                claims_->add("prune removes half the nodes when avg degree < sqrt(n)",
                             static_cast<double>(requests.size()),
                             static_cast<double>(active.size()) / 2.0,
                             2 * requests.size() >= active.size(),
                             !active.empty() && mu < rootN,
                             "k4 iteration " + std::to_string(iteration));
            if (!requests.empty()) {
                const auto learned =
                    parallel_neighborhood_learn(residual, requests, ledger_, cfg_, "k4.prune");
                std::vector<int> gone;
                for (const auto& [v, T] : requests) {
                    const auto it = learned.find(v);
                    const CliqueSet cs = cliques_containing(
                        v, T, it == learned.end() ? EdgeList{} : it->second, p);
                    found.insert(cs.begin(), cs.end());
                    gone.push_back(v);
                }
                residual = remove_nodes(residual, gone);
            }
        }
        if (residual.edge_count() == 0) break;

        const Clustering clustering =
            decompose(residual, residual.active_nodes(), phi_rational(cfg_, n),
                      mix64(seed_, 0x34d, static_cast<std::uint64_t>(iteration)), cfg_, &ledger_,
                      "k4.decomp");

        // small clusters: exhaustive learn, list, remove
        const double sizeFloor = cfg_.beta * rootN;
        std::vector<std::vector<int>> topClusters;
        {
            std::map<int, std::vector<int>> requests;
            for (const auto& c : clustering.clusters) {
                if (static_cast<double>(c.size()) >= sizeFloor) {
                    topClusters.push_back(c);
                    continue;
                }
                for (int v : c)
                    if (residual.degree(v) > 0) requests[v] = residual.neighbors(v);
            }
            if (!requests.empty()) {
                const auto learned =
                    parallel_neighborhood_learn(residual, requests, ledger_, cfg_, "k4.small");
                std::vector<int> gone;
                for (const auto& [v, T] : requests) {
                    const auto it = learned.find(v);
                    const CliqueSet cs = cliques_containing(
                        v, T, it == learned.end() ? EdgeList{} : it->second, p);
                    found.insert(cs.begin(), cs.end());
                    gone.push_back(v);
                }
                residual = remove_nodes(residual, gone);
            }
        }
        if (claims_)
            claims_->add("number of receiver clusters <= sqrt(n)/beta",
                         static_cast<double>(topClusters.size()), rootN / cfg_.beta,
                         static_cast<double>(topClusters.size()) <= rootN / cfg_.beta,
                         !topClusters.empty(), "k4 iteration " + std::to_string(iteration));
        if (residual.edge_count() == 0) break;

        // cover: top clusters plus recursive decompositions of the rest
        EdgeList topIntra, interEdges;
        {
            std::vector<int> owner(n, -1);
            for (std::size_t i = 0; i < topClusters.size(); ++i)
                for (int v : topClusters[i]) owner[v] = static_cast<int>(i);
            for (const auto& [u, v] : residual.edges()) {
                if (owner[u] >= 0 && owner[u] == owner[v])
                    topIntra.push_back({u, v});
                else
                    interEdges.push_back({u, v});
            }
        }
        const Cover cover = build_cover(residual, topClusters, topIntra, interEdges);
        const long long mNow = residual.edge_count();
        const std::vector<int> activeNow = residual.active_nodes();
        const double muNow =
            activeNow.empty() ? 0.0 : 2.0 * static_cast<double>(mNow) / activeNow.size();

        // intra listing on the receiver clusters
        {
            std::vector<std::pair<std::vector<int>, long long>> phases;
            long long ts = 0, tr = 0, tl = 0;
            for (std::size_t t = 0; t < cover.top.size(); ++t) {
                const CoverCluster& c = cover.all[cover.top[t]];
                if (c.edges.empty() || c.members.size() < static_cast<std::size_t>(p)) continue;
                ListingInstance inst =
                    make_instance(n, c.members, c.edges, {}, {}, p, cfg_);
                RoundLedger sub;
                SparseLister lister(std::move(inst), cfg_, sub, mix64(seed_, 0x1a, t),
                                    "k4.i" + std::to_string(iteration) + ".intra" +
                                        std::to_string(t));
                const SparseOutcome got = lister.list_all(AvgVariant::Full);
                found.insert(got.cliques.begin(), got.cliques.end());
                phases.push_back({c.members, sub.total_rounds()});
                for (const auto& [lbl, st] : sub.phases()) {
                    ts += st.msgs_sent;
                    tr += st.msgs_received;
                    tl = std::max(tl, st.max_edge_load);
                }
            }
            if (!phases.empty()) {
                ledger_.charge("k4.intra", parallel_compose(phases));
                ledger_.record_traffic("k4.intra", ts, tr, tl);
            }
        }

        // cross sets for every (receiver, cover cluster) pair
        const std::size_t nTop = cover.top.size();
        const std::size_t nAll = cover.all.size();
        std::vector<std::vector<CrossSets>> cross(nTop, std::vector<CrossSets>(nAll));
        for (std::size_t t = 0; t < nTop; ++t)
            for (std::size_t j = 0; j < nAll; ++j) {
                if (cover.top[t] == j) continue;
                cross[t][j] = cross_sets(residual, cover.all[cover.top[t]], cover.all[j]);
            }

        std::vector<char> lowAny(nTop, 0); // deferred in part 1 or part 2
        std::vector<EdgeList> clusterEc(nTop);
        std::vector<EdgeList> clusterEbar(nTop);
        for (std::size_t t = 0; t < nTop; ++t) {
            const auto& members = cover.all[cover.top[t]].members;
            std::set<int> in(members.begin(), members.end());
            clusterEc[t] = cover.all[cover.top[t]].edges;
            for (const auto& [u, v] : residual.edges())
                if ((in.count(u) > 0) != (in.count(v) > 0)) clusterEbar[t].push_back({u, v});
        }
        auto low_avg = [&](std::size_t t, long long mprime) {
            const auto& members = cover.all[cover.top[t]].members;
            const double avg = static_cast<double>(clusterEc[t].size()) /
                               static_cast<double>(members.size());
            return avg <= static_cast<double>(mprime) / (cfg_.gamma * n) ||
                   avg < rootN / cfg_.gamma_prime;
        };
        auto run_sparse = [&](std::size_t t, const std::map<int, EdgeList>& holdings,
                              const std::string& key, std::uint64_t salt,
                              std::vector<std::pair<std::vector<int>, long long>>& phases,
                              long long& ts, long long& tr, long long& tl) {
            const auto& members = cover.all[cover.top[t]].members;
            ListingInstance inst =
                make_instance(n, members, clusterEc[t], clusterEbar[t], holdings, p, cfg_);
            RoundLedger sub;
            SparseLister lister(std::move(inst), cfg_, sub, mix64(seed_, salt, t), key);
            const SparseOutcome got = lister.list_all(AvgVariant::Full);
            found.insert(got.cliques.begin(), got.cliques.end());
            phases.push_back({members, sub.total_rounds()});
            for (const auto& [lbl, st] : sub.phases()) {
                ts += st.msgs_sent;
                tr += st.msgs_received;
                tl = std::max(tl, st.max_edge_load);
            }
        };

        long long elow = 0;

        // part 1: non-sstar outside nodes ship their cover-cluster edge lists
        {
            std::vector<std::pair<std::vector<int>, long long>> phases;
            long long ts = 0, tr = 0, tl = 0;
            for (std::size_t t = 0; t < nTop; ++t) {
                const auto& members = cover.all[cover.top[t]].members;
                std::set<int> in(members.begin(), members.end());
                std::map<int, EdgeList> holdings;
                long long maxChunk = 0, shipped = 0;
                for (std::size_t j = 0; j < nAll; ++j) {
                    if (cover.top[t] == j) continue;
                    const CoverCluster& cstar = cover.all[j];
                    std::set<int> sstarSet(cross[t][j].sstar_in.begin(),
                                           cross[t][j].sstar_in.end());
                    std::map<int, EdgeList> incident;
                    for (const auto& e : cstar.edges) {
                        incident[e.first].push_back(e);
                        incident[e.second].push_back(e);
                    }
                    for (int u : cstar.members) {
                        if (in.count(u) || sstarSet.count(u)) continue;
                        const auto it = incident.find(u);
                        if (it == incident.end()) continue;
                        std::vector<int> cnbrs;
                        for (int w : residual.neighbors(u))
                            if (in.count(w)) cnbrs.push_back(w);
                        if (cnbrs.empty()) continue;
                        std::sort(cnbrs.begin(), cnbrs.end());
                        EdgeList mine = it->second;
                        std::sort(mine.begin(), mine.end());
                        const long long cnt = static_cast<long long>(mine.size());
                        const long long chunks = static_cast<long long>(cnbrs.size());
                        const long long maxSize = (cnt + chunks - 1) / chunks;
                        maxChunk = std::max(maxChunk, maxSize);
                        shipped += cnt;
                        for (long long i = 0; i < cnt; ++i) {
                            const Edge& e = mine[static_cast<std::size_t>(i)];
                            if (in.count(e.first) || in.count(e.second)) continue;
                            holdings[cnbrs[static_cast<std::size_t>(i / maxSize)]].push_back(e);
                        }
                    }
                }
                if (maxChunk > 0) {
                    ledger_.charge("k4.part1", maxChunk);
                    ledger_.record_traffic("k4.part1", shipped, shipped, maxChunk);
                }
                std::set<Edge> uniq;
                for (const auto& [v, h] : holdings) uniq.insert(h.begin(), h.end());
                if (low_avg(t, static_cast<long long>(uniq.size()))) {
                    lowAny[t] = 1;
                    continue;
                }
                run_sparse(t, holdings,
                           "k4.i" + std::to_string(iteration) + ".p1." + std::to_string(t), 0x1b,
                           phases, ts, tr, tl);
            }
            if (!phases.empty()) {
                ledger_.charge("k4.part1", parallel_compose(phases));
                ledger_.record_traffic("k4.part1", ts, tr, tl);
            }
        }

        // part 2: non-bad members learn the edge squares of their sstar
        // neighborhoods inside each cover cluster
        {
            std::vector<std::pair<std::vector<int>, long long>> phases;
            long long ts = 0, tr = 0, tl = 0;
            for (std::size_t t = 0; t < nTop; ++t) {
                const auto& members = cover.all[cover.top[t]].members;
                std::map<int, EdgeList> holdings;
                long long maxLearn = 0, learnedTotal = 0;
                for (std::size_t j = 0; j < nAll; ++j) {
                    if (cover.top[t] == j) continue;
                    const CoverCluster& cstar = cover.all[j];
                    std::set<int> sstarSet(cross[t][j].sstar_in.begin(),
                                           cross[t][j].sstar_in.end());
                    if (sstarSet.empty()) continue;
                    std::set<int> badSet(cross[t][j].bad.begin(), cross[t][j].bad.end());
                    std::set<Edge> starEdges(cstar.edges.begin(), cstar.edges.end());
                    for (int u : members) {
                        if (badSet.count(u)) continue;
                        std::vector<int> tset;
                        for (int w : residual.neighbors(u))
                            if (sstarSet.count(w)) tset.push_back(w);
                        if (tset.empty()) continue;
                        maxLearn = std::max<long long>(maxLearn,
                                                       static_cast<long long>(tset.size()));
                        for (std::size_t a = 0; a < tset.size(); ++a)
                            for (std::size_t b = a + 1; b < tset.size(); ++b) {
                                const Edge e = make_edge(tset[a], tset[b]);
                                if (starEdges.count(e)) {
                                    holdings[u].push_back(e);
                                    ++learnedTotal;
                                }
                            }
                    }
                }
                if (maxLearn > 0) {
                    ledger_.charge("k4.part2", 2 * maxLearn);
                    ledger_.record_traffic("k4.part2", learnedTotal, learnedTotal, 1);
                }
                std::set<Edge> uniq;
                for (const auto& [v, h] : holdings) uniq.insert(h.begin(), h.end());
                if (low_avg(t, static_cast<long long>(uniq.size()))) {
                    lowAny[t] = 1;
                    continue;
                }
                run_sparse(t, holdings,
                           "k4.i" + std::to_string(iteration) + ".p2." + std::to_string(t), 0x1c,
                           phases, ts, tr, tl);
            }
            if (!phases.empty()) {
                ledger_.charge("k4.part2", parallel_compose(phases));
                ledger_.record_traffic("k4.part2", ts, tr, tl);
            }
        }

        // part 3: bad nodes ship their bad-internal edges to the cover
        // cluster; each cover cluster lists with the restricted average rule
        {
            WorstRatio w52, w53, w54, w55;
            std::vector<std::pair<std::vector<int>, long long>> phases;
            long long ts = 0, tr = 0, tl = 0;
            for (std::size_t j = 0; j < nAll; ++j) {
                const CoverCluster& cstar = cover.all[j];
                std::set<int> inStar(cstar.members.begin(), cstar.members.end());
                std::map<int, int> degStar;
                for (const auto& [x, y] : cstar.edges) {
                    ++degStar[x];
                    ++degStar[y];
                }
                std::map<int, EdgeList> holdings;
                EdgeList ebar;
                std::map<int, long long> received;
                long long maxBad = 0;
                for (std::size_t t = 0; t < nTop; ++t) {
                    if (cover.top[t] == j) continue;
                    const CrossSets& cs = cross[t][j];
                    if (cs.bad.empty() || cs.sstar_in.empty()) continue;
                    maxBad = std::max<long long>(maxBad,
                                                 static_cast<long long>(cs.bad.size()));
                    std::set<int> badSet(cs.bad.begin(), cs.bad.end());
                    std::set<int> sstarSet(cs.sstar_in.begin(), cs.sstar_in.end());
                    long long pairMax = 0, pairTotal = 0;
                    for (int u : cs.bad) {
                        if (inStar.count(u)) continue;
                        std::vector<int> dests;
                        EdgeList mine;
                        for (int w : residual.neighbors(u)) {
                            if (sstarSet.count(w)) {
                                dests.push_back(w);
                                ebar.push_back(make_edge(u, w));
                            }
                            if (badSet.count(w) && !inStar.count(w))
                                mine.push_back(make_edge(u, w));
                        }
                        if (dests.empty() || mine.empty()) continue;
                        std::sort(dests.begin(), dests.end());
                        std::sort(mine.begin(), mine.end());
                        const long long cnt = static_cast<long long>(mine.size());
                        const long long chunks = static_cast<long long>(dests.size());
                        const long long maxSize = (cnt + chunks - 1) / chunks;
                        pairMax = std::max(pairMax, maxSize);
                        pairTotal += cnt;
                        for (long long i = 0; i < cnt; ++i) {
                            const int dst = dests[static_cast<std::size_t>(i / maxSize)];
                            holdings[dst].push_back(mine[static_cast<std::size_t>(i)]);
                            ++received[dst];
                        }
                    }
                    if (pairMax > 0) {
                        const std::string lbl = "k4.part3[C=" + std::to_string(t) +
                                                ",C*=" + std::to_string(j) + "]";
                        ledger_.charge(lbl, pairMax);
                        ledger_.record_traffic(lbl, pairTotal, pairTotal, pairMax);
                    }
                }
                if (holdings.empty() && ebar.empty()) continue;

                std::sort(ebar.begin(), ebar.end());
                ebar.erase(std::unique(ebar.begin(), ebar.end()), ebar.end());
                std::map<int, long long> barIncUnique;
                for (const auto& [x, y] : ebar) ++barIncUnique[inStar.count(x) ? x : y];

                for (const auto& [v, inc] : barIncUnique) {
                    const auto it = degStar.find(v);
                    const double ds = it == degStar.end() ? 0.0 : it->second;
                    w52.update(static_cast<double>(inc), ds,
                               "node " + std::to_string(v) + ", C*=" + std::to_string(j));
                    // cover degree squared must strictly exceed n
                    w55.update(static_cast<double>(n) + 1.0, ds * ds,
                               "node " + std::to_string(v) + ", C*=" + std::to_string(j));
                }
                for (const auto& [v, rc] : received) {
                    const auto it = degStar.find(v);
                    const double ds = it == degStar.end() ? 0.0 : it->second;
                    w53.update(static_cast<double>(rc), 2.0 * rootN * ds,
                               "node " + std::to_string(v) + ", C*=" + std::to_string(j));
                }
                if (maxBad > 0) {
                    const double avg = cstar.members.empty()
                                           ? 0.0
                                           : 2.0 * static_cast<double>(cstar.edges.size()) /
                                                 static_cast<double>(cstar.members.size());
                    w54.update(0.5 * static_cast<double>(maxBad), avg,
                               "C*=" + std::to_string(j));
                }

                ListingInstance inst =
                    make_instance(n, cstar.members, cstar.edges, ebar, holdings, p, cfg_);
                RoundLedger sub;
                SparseLister lister(std::move(inst), cfg_, sub, mix64(seed_, 0x1d, j),
                                    "k4.i" + std::to_string(iteration) + ".p3." +
                                        std::to_string(j));
                const SparseOutcome got = lister.list_all(AvgVariant::Restricted);
                found.insert(got.cliques.begin(), got.cliques.end());
                phases.push_back({cstar.members, sub.total_rounds()});
                for (const auto& [lbl, st] : sub.phases()) {
                    ts += st.msgs_sent;
                    tr += st.msgs_received;
                    tl = std::max(tl, st.max_edge_load);
                }
            }
            if (!phases.empty()) {
                ledger_.charge("k4.part3", parallel_compose(phases));
                ledger_.record_traffic("k4.part3", ts, tr, tl);
            }
            if (claims_) {
                claims_->add("cross-edge incidence <= cover-cluster degree", w52.lhs, w52.rhs,
                             w52.pass, w52.seen, w52.witness);
                claims_->add("received edge volume <= 2*sqrt(n)*cover-cluster degree", w53.lhs,
                             w53.rhs, w53.pass, w53.seen, w53.witness);
                claims_->add("cover-cluster average degree >= max bad-set size / 2", w54.lhs,
                             w54.rhs, w54.pass, w54.seen, w54.witness);
                claims_->add("boundary-incident nodes have cover degree > sqrt(n)", w55.lhs,
                             w55.rhs, w55.pass, w55.seen, w55.witness);
            }
        }

        // shrink: drop listed cluster edges, keep deferred ones
        std::set<Edge> kept(residual.edges().begin(), residual.edges().end());
        for (std::size_t t = 0; t < nTop; ++t) {
            if (lowAny[t]) {
                elow += static_cast<long long>(clusterEc[t].size());
                continue;
            }
            for (const auto& e : clusterEc[t]) kept.erase(e);
        }
        if (claims_)
            claims_->add("deferred low-average edges <= (1/gamma + 1/gamma')|E|",
                         static_cast<double>(elow),
                         (1.0 / cfg_.gamma + 1.0 / cfg_.gamma_prime) * mNow,
                         static_cast<double>(elow) <=
                             (1.0 / cfg_.gamma + 1.0 / cfg_.gamma_prime) * mNow,
                         muNow >= rootN, "k4 iteration " + std::to_string(iteration));
        residual = Graph(n, EdgeList(kept.begin(), kept.end()));
        ++iteration;
    }
    return found;
}

CliqueSet k4_list(const Graph& g, std::uint64_t seed, const Config& cfg, RoundLedger& ledger,
                  ClaimsReport* claims) {
    K4Lister lister(g, seed, cfg, ledger, claims);
    return lister.run();
}

} // namespace congest
