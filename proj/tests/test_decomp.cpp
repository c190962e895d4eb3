#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "congest/decomp.hpp"
#include "congest/generators.hpp"

using namespace congest;

namespace {

std::vector<int> everyone(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

} // namespace

TEST_CASE("K_16 stays a single cluster at phi = 1/4") {
    const Graph g = gen_complete(16);
    Clustering c = decompose(g, everyone(16), Rational(1, 4), 1, Config::desk());
    CHECK(c.clusters.size() == 1);
    CHECK(c.interClusterEdges.empty());
    CHECK(c.achievedEpsilon == Rational(0));
}

TEST_CASE("two K_8s joined by a bridge split into two clusters") {
    const Graph g = gen_barbell(16);
    Clustering c = decompose(g, everyone(16), Rational(1, 4), 1, Config::desk());
    CHECK(c.clusters.size() == 2);
    REQUIRE(c.interClusterEdges.size() == 1);
    CHECK(c.interClusterEdges[0] == make_edge(7, 8));
    CHECK(c.achievedEpsilon == Rational(1, 57));

    ValidationReport rep =
        validate_decomposition(g, everyone(16), c, Rational(1, 4), 1.0 / 4.0);
    CHECK(rep.pass);
}

TEST_CASE("edgeless graph decomposes into singletons") {
    const Graph g(5, {});
    Clustering c = decompose(g, everyone(5), Rational(1, 4), 1, Config::desk());
    CHECK(c.clusters.size() == 5);
    CHECK(c.interClusterEdges.empty());
}

TEST_CASE("edge conservation on random graphs") {
    for (int seed = 1; seed <= 5; ++seed) {
        const Graph g = gen_erdos_renyi(40, 0.15, seed);
        Clustering c = decompose(g, everyone(40), Rational(1, 8), seed, Config::desk());
        std::set<Edge> seen(c.interClusterEdges.begin(), c.interClusterEdges.end());
        std::size_t total = c.interClusterEdges.size();
        for (const auto& intra : c.intraEdges) {
            total += intra.size();
            seen.insert(intra.begin(), intra.end());
        }
        CHECK(total == static_cast<std::size_t>(g.edge_count()));
        CHECK(seen.size() == total); // no edge in two buckets
    }
}

TEST_CASE("clustering JSON round trip") {
    const Graph g = gen_barbell(16);
    Clustering c = decompose(g, everyone(16), Rational(1, 4), 1, Config::desk());
    Clustering back = clustering_from_json(clustering_to_json(c));
    CHECK(back.clusters == c.clusters);
    CHECK(back.interClusterEdges == c.interClusterEdges);
    CHECK(back.achievedEpsilon == c.achievedEpsilon);
    CHECK(back.achievedPhi == c.achievedPhi);
}
