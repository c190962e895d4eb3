#include "congest/decomp.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "congest/errors.hpp"
#include "congest/rng.hpp"

namespace congest {

Clustering decompose(const Graph& g, const std::vector<int>& participants,
                     const Rational& targetPhi, std::uint64_t seed, const Config& cfg,
                     RoundLedger* ledger, const std::string& label) {
    if (targetPhi <= Rational(0) || Rational(1) <= targetPhi)
        throw InputError("decompose: targetPhi must be in (0,1)");

    std::vector<int> start(participants);
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());

    Clustering out;
    std::deque<std::vector<int>> work;
    if (!start.empty()) work.push_back(start);
    std::uint64_t partCounter = 0;

    while (!work.empty()) {
        std::vector<int> part = std::move(work.front());
        work.pop_front();
        if (part.size() == 1) {
            out.clusters.push_back(part);
            out.clusterPhi.push_back(Rational(1));
            continue;
        }
        ClusterView view(g, part, ViewMode::LoopAugmented);
        const auto method = view.size() <= kExactConductanceCap ? ConductanceMethod::Exact
                                                                : ConductanceMethod::Sweep;
        const ConductanceResult res =
            graph_conductance(view, method, mix64(seed, partCounter++));
        if (res.value >= targetPhi) {
            out.clusters.push_back(part);
            out.clusterPhi.push_back(res.value);
            continue;
        }
        std::set<int> inCut(res.best_cut.begin(), res.best_cut.end());
        std::vector<int> rest;
        for (int v : part)
            if (!inCut.count(v)) rest.push_back(v);
        if (res.best_cut.empty() || rest.empty())
            throw InvariantFailure("decompose: degenerate cut");
        for (int v : res.best_cut)
            for (int w : g.neighbors(v))
                if (!inCut.count(w) && view.contains(w)) out.interClusterEdges.push_back(make_edge(v, w));
        work.push_back(res.best_cut);
        work.push_back(rest);
    }

    // deterministic order and per-cluster intra edge sets
    std::vector<std::size_t> idx(out.clusters.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (auto& c : out.clusters) std::sort(c.begin(), c.end());
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        return out.clusters[x] < out.clusters[y];
    });
    Clustering ordered;
    ordered.interClusterEdges = out.interClusterEdges;
    for (std::size_t i : idx) {
        ordered.clusters.push_back(out.clusters[i]);
        ordered.clusterPhi.push_back(out.clusterPhi[i]);
    }
    std::sort(ordered.interClusterEdges.begin(), ordered.interClusterEdges.end());
    ordered.interClusterEdges.erase(
        std::unique(ordered.interClusterEdges.begin(), ordered.interClusterEdges.end()),
        ordered.interClusterEdges.end());

    long long participatingEdges = 0;
    std::vector<char> in(g.node_count(), 0);
    for (int v : start) in[v] = 1;
    for (const auto& [u, v] : g.edges())
        if (in[u] && in[v]) ++participatingEdges;

    ordered.intraEdges.resize(ordered.clusters.size());
    std::vector<int> clusterOf(g.node_count(), -1);
    for (std::size_t i = 0; i < ordered.clusters.size(); ++i)
        for (int v : ordered.clusters[i]) clusterOf[v] = static_cast<int>(i);
    for (const auto& [u, v] : g.edges())
        if (in[u] && in[v] && clusterOf[u] == clusterOf[v] && clusterOf[u] >= 0)
            ordered.intraEdges[clusterOf[u]].push_back({u, v});

    ordered.achievedEpsilon =
        participatingEdges == 0
            ? Rational(0)
            : Rational(static_cast<std::int64_t>(ordered.interClusterEdges.size()),
                       participatingEdges);
    ordered.achievedPhi = Rational(1);
    for (std::size_t i = 0; i < ordered.clusters.size(); ++i)
        if (ordered.clusters[i].size() > 1 && ordered.clusterPhi[i] < ordered.achievedPhi)
            ordered.achievedPhi = ordered.clusterPhi[i];

    ordered.chargedRounds = cfg.decomp_rounds(g.node_count());
    if (ledger) ledger->charge(label, ordered.chargedRounds);
    return ordered;
}

ValidationReport validate_decomposition(const Graph& g, const std::vector<int>& participants,
                                        const Clustering& clustering, const Rational& phiTarget,
                                        double epsilonTarget) {
    ValidationReport rep;
    auto fail = [&](const std::string& why) {
        rep.pass = false;
        rep.failures.push_back(why);
    };

    std::set<int> want(participants.begin(), participants.end());
    std::set<int> seen;
    for (const auto& c : clustering.clusters)
        for (int v : c)
            if (!seen.insert(v).second) fail("node " + std::to_string(v) + " in two clusters");
    if (seen != want) fail("clusters do not partition the participant set");

    // edge conservation over participating edges
    std::set<Edge> all;
    for (const auto& [u, v] : g.edges())
        if (want.count(u) && want.count(v)) all.insert({u, v});
    std::set<Edge> got(clustering.interClusterEdges.begin(), clustering.interClusterEdges.end());
    long long dupes = 0;
    for (const auto& ce : clustering.intraEdges)
        for (const auto& e : ce)
            if (!got.insert(e).second) ++dupes;
    if (dupes > 0) fail("edge assigned to more than one edge set");
    if (got != all) fail("inter/intra edge sets do not cover the participating edges exactly");

    long long participatingEdges = static_cast<long long>(all.size());
    rep.epsilon = participatingEdges == 0
                      ? Rational(0)
                      : Rational(static_cast<std::int64_t>(clustering.interClusterEdges.size()),
                                 participatingEdges);
    if (participatingEdges > 0 &&
        rep.epsilon.to_double() > epsilonTarget + 1e-12)
        fail("inter-cluster edge fraction " + rep.epsilon.str() + " exceeds target");

    for (std::size_t i = 0; i < clustering.clusters.size(); ++i) {
        const auto& c = clustering.clusters[i];
        if (c.size() < 2) continue;
        ClusterView view(g, c, ViewMode::LoopAugmented);
        const auto method = view.size() <= kExactConductanceCap ? ConductanceMethod::Exact
                                                                : ConductanceMethod::Sweep;
        const ConductanceResult res = graph_conductance(view, method, mix64(0x9a, i));
        if (res.value < phiTarget)
            fail("cluster " + std::to_string(i) + " conductance certificate " + res.value.str() +
                 " below target " + phiTarget.str());
        if (res.value < rep.minPhi) rep.minPhi = res.value;
        for (int v : c) {
            ClusterView induced(g, c, ViewMode::Induced);
            const int degC = induced.view_degree(induced.local_of(v));
            if (degC == 0) {
                fail("node " + std::to_string(v) + " isolated inside multi-node cluster");
                continue;
            }
            rep.dilution = std::max(rep.dilution,
                                    static_cast<double>(g.degree(v)) / degC);
        }
    }
    return rep;
}

nlohmann::json clustering_to_json(const Clustering& c) {
    nlohmann::json j;
    j["clusters"] = c.clusters;
    nlohmann::json inter = nlohmann::json::array();
    for (const auto& [u, v] : c.interClusterEdges) inter.push_back({u, v});
    j["inter_cluster_edges"] = inter;
    j["achieved_epsilon"] = {c.achievedEpsilon.num(), c.achievedEpsilon.den()};
    j["achieved_phi"] = {c.achievedPhi.num(), c.achievedPhi.den()};
    j["charged_rounds"] = c.chargedRounds;
    nlohmann::json phis = nlohmann::json::array();
    for (const auto& r : c.clusterPhi) phis.push_back({r.num(), r.den()});
    j["cluster_phi"] = phis;
    nlohmann::json intra = nlohmann::json::array();
    for (const auto& ce : c.intraEdges) {
        nlohmann::json one = nlohmann::json::array();
        for (const auto& [u, v] : ce) one.push_back({u, v});
        intra.push_back(one);
    }
    j["intra_edges"] = intra;
    return j;
}

Clustering clustering_from_json(const nlohmann::json& j) {
    Clustering c;
    c.clusters = j.at("clusters").get<std::vector<std::vector<int>>>();
    for (const auto& e : j.at("inter_cluster_edges"))
        c.interClusterEdges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
    c.achievedEpsilon = Rational(j.at("achieved_epsilon").at(0).get<std::int64_t>(),
                                 j.at("achieved_epsilon").at(1).get<std::int64_t>());
    c.achievedPhi = Rational(j.at("achieved_phi").at(0).get<std::int64_t>(),
                             j.at("achieved_phi").at(1).get<std::int64_t>());
    c.chargedRounds = j.at("charged_rounds").get<long long>();
    for (const auto& r : j.at("cluster_phi"))
        c.clusterPhi.push_back(Rational(r.at(0).get<std::int64_t>(), r.at(1).get<std::int64_t>()));
    for (const auto& ce : j.at("intra_edges")) {
        EdgeList one;
        for (const auto& e : ce) one.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
        c.intraEdges.push_back(one);
    }
    return c;
}

} // namespace congest
