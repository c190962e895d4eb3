#include "congest/oracle.hpp"

#include <algorithm>
#include <map>
#include <functional>

#include "congest/errors.hpp"

namespace congest {

namespace {

std::vector<int> degeneracy_order(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> deg(n), order;
    std::vector<char> removed(n, 0);
    int maxd = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        maxd = std::max(maxd, deg[v]);
    }
    std::vector<std::vector<int>> buckets(maxd + 1);
    for (int v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
    int cur = 0;
    for (int step = 0; step < n; ++step) {
        while (cur > 0 && !buckets[cur - 1].empty()) --cur;
        while (buckets[cur].empty()) ++cur;
        int v = -1;
        while (!buckets[cur].empty()) {
            int cand = buckets[cur].back();
            buckets[cur].pop_back();
            if (!removed[cand] && deg[cand] == cur) {
                v = cand;
                break;
            }
        }
        if (v < 0) {
            --step;
            continue;
        }
        removed[v] = 1;
        order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (removed[w]) continue;
            --deg[w];
            buckets[deg[w]].push_back(w);
        }
    }
    return order;
}

void extend(const Graph& g, int p, std::vector<int>& clique, const std::vector<int>& cand,
            CliqueSet& out) {
    if (static_cast<int>(clique.size()) == p) {
        std::vector<int> c = clique;
        std::sort(c.begin(), c.end());
        out.insert(c);
        return;
    }
    const int need = p - static_cast<int>(clique.size());
    if (static_cast<int>(cand.size()) < need) return;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        const int v = cand[i];
        std::vector<int> next;
        for (std::size_t j = i + 1; j < cand.size(); ++j)
            if (g.has_edge(v, cand[j])) next.push_back(cand[j]);
        clique.push_back(v);
        extend(g, p, clique, next, out);
        clique.pop_back();
    }
}

} // namespace

CliqueSet enumerate_cliques(const Graph& g, int p) {
    if (p < 3) throw InputError("enumerate_cliques: p must be at least 3");
    if (g.node_count() > kOracleNodeCap)
        throw CapabilityError("enumerate_cliques: graph above the oracle node cap");

    const std::vector<int> order = degeneracy_order(g);
    std::vector<int> pos(g.node_count());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;

    std::vector<std::vector<int>> later(g.node_count());
    for (int v = 0; v < g.node_count(); ++v)
        for (int w : g.neighbors(v))
            if (pos[w] > pos[v]) later[v].push_back(w);

    CliqueSet out;
    std::vector<int> clique;
    for (int v : order) {
        clique.assign(1, v);
        extend(g, p, clique, later[v], out);
    }
    return out;
}

CliqueSet enumerate_cliques_naive(const Graph& g, int p) {
    if (p < 3) throw InputError("enumerate_cliques_naive: p must be at least 3");
    if (g.node_count() > 25)
        throw CapabilityError("enumerate_cliques_naive: intended for n <= 25");
    CliqueSet out;
    std::vector<int> pick(p);
    const int n = g.node_count();
    // odometer over strictly increasing p-tuples
    for (int i = 0; i < p; ++i) pick[i] = i;
    if (p > n) return out;
    while (true) {
        bool ok = true;
        for (int i = 0; i < p && ok; ++i)
            for (int j = i + 1; j < p && ok; ++j)
                if (!g.has_edge(pick[i], pick[j])) ok = false;
        if (ok) out.insert(pick);
        int i = p - 1;
        while (i >= 0 && pick[i] == n - p + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < p; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

CliqueSet qualifying_cliques(int n, const std::vector<int>& inside, const EdgeList& ec,
                             const EdgeList& ebar, const EdgeList& eprime, int p, int pprime) {
    if (pprime < 2 || pprime > p) throw InputError("qualifying_cliques: need 2 <= p' <= p");

    std::set<int> in(inside.begin(), inside.end());
    std::set<Edge> sec(ec.begin(), ec.end()), sbar, spr;
    for (const auto& [u, v] : ebar) sbar.insert(make_edge(u, v));
    for (const auto& [u, v] : eprime) spr.insert(make_edge(u, v));

    auto has = [](const std::set<Edge>& s, int u, int v) {
        return s.count(make_edge(u, v)) > 0;
    };

    // candidate outside nodes: real IDs touched by ebar or eprime, not inside
    std::set<int> outside;
    for (const auto& [u, v] : ebar) {
        if (!in.count(u) && u < n) outside.insert(u);
        if (!in.count(v) && v < n) outside.insert(v);
    }
    for (const auto& [u, v] : eprime) {
        if (!in.count(u) && u < n) outside.insert(u);
        if (!in.count(v) && v < n) outside.insert(v);
    }
    std::vector<int> ins(inside.begin(), inside.end());
    std::sort(ins.begin(), ins.end());
    std::vector<int> outs(outside.begin(), outside.end());

    CliqueSet out;
    const int q = p - pprime;
    std::vector<int> ipick, opick;

    // enumerate p'-cliques of (inside, ec), then extend with q outside nodes
    std::function<void(std::size_t)> chooseOut = [&](std::size_t start) {
        if (static_cast<int>(opick.size()) == q) {
            std::vector<int> tup = ipick;
            tup.insert(tup.end(), opick.begin(), opick.end());
            std::sort(tup.begin(), tup.end());
            out.insert(tup);
            return;
        }
        for (std::size_t i = start; i < outs.size(); ++i) {
            const int w = outs[i];
            bool ok = true;
            for (int u : ipick)
                if (!has(sbar, u, w)) { ok = false; break; }
            for (int x : opick)
                if (ok && !has(spr, x, w)) ok = false;
            if (!ok) continue;
            opick.push_back(w);
            chooseOut(i + 1);
            opick.pop_back();
        }
    };
    std::function<void(std::size_t)> chooseIn = [&](std::size_t start) {
        if (static_cast<int>(ipick.size()) == pprime) {
            chooseOut(0);
            return;
        }
        for (std::size_t i = start; i < ins.size(); ++i) {
            const int v = ins[i];
            bool ok = true;
            for (int u : ipick)
                if (!has(sec, u, v)) { ok = false; break; }
            if (!ok) continue;
            ipick.push_back(v);
            chooseIn(i + 1);
            ipick.pop_back();
        }
    };
    chooseIn(0);
    return out;
}

CliqueSet cliques_containing(int v, const std::vector<int>& T, const EdgeList& learned, int p) {
    CliqueSet out;
    if (p - 1 > static_cast<int>(T.size())) return out;
    std::map<int, std::vector<int>> adj;
    for (const auto& [x, y] : learned) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    for (auto& [x, a] : adj) std::sort(a.begin(), a.end());

    std::vector<int> pick;
    std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& cand) {
        if (static_cast<int>(pick.size()) == p - 1) {
            std::vector<int> c = pick;
            c.push_back(v);
            std::sort(c.begin(), c.end());
            out.insert(c);
            return;
        }
        for (std::size_t i = 0; i < cand.size(); ++i) {
            const int u = cand[i];
            const auto it = adj.find(u);
            std::vector<int> next;
            if (it != adj.end())
                for (std::size_t j = i + 1; j < cand.size(); ++j)
                    if (std::binary_search(it->second.begin(), it->second.end(), cand[j]))
                        next.push_back(cand[j]);
            if (static_cast<int>(pick.size()) + 1 + static_cast<int>(next.size()) < p - 1)
                continue;
            pick.push_back(u);
            rec(next);
            pick.pop_back();
        }
    };
    std::vector<int> sortedT = T;
    std::sort(sortedT.begin(), sortedT.end());
    rec(sortedT);
    return out;
}

} // namespace congest
