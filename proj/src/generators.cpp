#include "congest/generators.hpp"

#include <algorithm>
#include <set>

#include "congest/errors.hpp"
#include "congest/rng.hpp"

namespace congest {

Graph gen_erdos_renyi(int n, double p_edge, std::uint64_t seed) {
    if (n < 1 || p_edge < 0.0 || p_edge > 1.0)
        throw InputError("erdos-renyi: need n >= 1 and p in [0,1]");
    EdgeList edges;
    const double scale = 1.0 / static_cast<double>(std::uint64_t(1) << 53);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const double x = static_cast<double>(
                                 mix64(seed, static_cast<std::uint64_t>(u),
                                       static_cast<std::uint64_t>(v)) >>
                                 11) *
                             scale;
            if (x < p_edge) edges.push_back({u, v});
        }
    return Graph(n, std::move(edges));
}

Graph gen_random_regular(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0 || d >= n) throw InputError("random-regular: need 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw InputError("random-regular: n*d must be even");
    auto eng = make_engine(mix64(seed, 0x7267));
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * d);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        for (std::size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[bounded(eng, i)]);
        std::set<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            const int u = stubs[i], v = stubs[i + 1];
            if (u == v || edges.count(make_edge(u, v))) {
                ok = false;
                break;
            }
            edges.insert(make_edge(u, v));
        }
        if (ok) return Graph(n, EdgeList(edges.begin(), edges.end()));
    }
    throw StatisticalFailure("random-regular: pairing retries exhausted");
}

Graph gen_cycle(int n) {
    if (n < 3) throw InputError("cycle: need n >= 3");
    EdgeList edges;
    for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
    return Graph(n, std::move(edges));
}

Graph gen_complete(int n) {
    if (n < 1) throw InputError("complete: need n >= 1");
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph gen_barbell(int n) {
    if (n < 4 || n % 2 != 0) throw InputError("barbell: need even n >= 4");
    const int h = n / 2;
    EdgeList edges;
    for (int u = 0; u < h; ++u)
        for (int v = u + 1; v < h; ++v) edges.push_back({u, v});
    for (int u = h; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    edges.push_back({h - 1, h});
    return Graph(n, std::move(edges));
}

Graph gen_two_expanders_bridged(int n, double p_edge, int bridges, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw InputError("two-expanders-bridged: need even n >= 4");
    if (bridges < 1) throw InputError("two-expanders-bridged: need >= 1 bridge");
    const int h = n / 2;
    const Graph a = gen_erdos_renyi(h, p_edge, mix64(seed, 1));
    const Graph b = gen_erdos_renyi(h, p_edge, mix64(seed, 2));
    std::set<Edge> edges(a.edges().begin(), a.edges().end());
    for (const auto& [u, v] : b.edges()) edges.insert({u + h, v + h});
    auto eng = make_engine(mix64(seed, 3));
    int placed = 0;
    for (int guard = 0; placed < bridges && guard < 100 * bridges; ++guard) {
        const int u = static_cast<int>(bounded(eng, static_cast<std::uint64_t>(h)));
        const int v = h + static_cast<int>(bounded(eng, static_cast<std::uint64_t>(h)));
        if (edges.insert(make_edge(u, v)).second) ++placed;
    }
    if (placed < bridges)
        throw StatisticalFailure("two-expanders-bridged: could not place the bridges");
    return Graph(n, EdgeList(edges.begin(), edges.end()));
}

GeneratedGraph gen_planted_clique_overlay(int n, double p_edge, int count, int size,
                                          std::uint64_t seed) {
    if (count < 0 || size < 2 || size > n)
        throw InputError("planted-clique-overlay: need 2 <= size <= n and count >= 0");
    const Graph base = gen_erdos_renyi(n, p_edge, mix64(seed, 0xba5e));
    std::set<Edge> edges(base.edges().begin(), base.edges().end());
    auto eng = make_engine(mix64(seed, 0x9a7e));
    GeneratedGraph out;
    out.family = "planted-clique-overlay";
    for (int c = 0; c < count; ++c) {
        std::set<int> nodes;
        while (static_cast<int>(nodes.size()) < size)
            nodes.insert(static_cast<int>(bounded(eng, static_cast<std::uint64_t>(n))));
        std::vector<int> clique(nodes.begin(), nodes.end());
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                edges.insert(make_edge(clique[i], clique[j]));
        out.planted.push_back(std::move(clique));
    }
    out.graph = Graph(n, EdgeList(edges.begin(), edges.end()));
    return out;
}

GeneratedGraph generate(const std::string& family, int n,
                        const std::map<std::string, double>& params, std::uint64_t seed) {
    auto get = [&](const std::string& key, double dflt) {
        const auto it = params.find(key);
        return it == params.end() ? dflt : it->second;
    };
    GeneratedGraph out;
    out.family = family;
    if (family == "erdos-renyi") {
        out.graph = gen_erdos_renyi(n, get("p_edge", 0.3), seed);
    } else if (family == "random-regular") {
        out.graph = gen_random_regular(n, static_cast<int>(get("d", 4)), seed);
    } else if (family == "planted-clique-overlay") {
        out = gen_planted_clique_overlay(n, get("p_edge", 0.2),
                                         static_cast<int>(get("count", 3)),
                                         static_cast<int>(get("size", 5)), seed);
    } else if (family == "two-expanders-bridged") {
        out.graph = gen_two_expanders_bridged(n, get("p_edge", 0.5),
                                              static_cast<int>(get("bridges", 4)), seed);
    } else if (family == "barbell") {
        out.graph = gen_barbell(n);
    } else if (family == "cycle") {
        out.graph = gen_cycle(n);
    } else if (family == "complete") {
        out.graph = gen_complete(n);
    } else {
        throw InputError("generate: unknown family '" + family + "'");
    }
    return out;
}

} // namespace congest
