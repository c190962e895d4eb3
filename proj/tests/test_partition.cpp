#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "congest/generators.hpp"
#include "congest/partition.hpp"
#include "congest/rng.hpp"

using namespace congest;

namespace {

PartitionSpec base_spec(int n1, int n2) {
    PartitionSpec spec;
    for (int v = 0; v < n1; ++v) spec.V1.push_back(v);
    for (int v = 0; v < n2; ++v) spec.V2.push_back(n1 + v);
    return spec;
}

// Random graph whose V1-internal, V2-internal, and cross edge counts stay at
// or below the declared m1/m2/m12.
Graph conforming_graph(const PartitionSpec& spec, std::uint64_t seed) {
    std::set<Edge> edges;
    auto eng = make_engine(seed);
    auto fill = [&](const std::vector<int>& xs, const std::vector<int>& ys, long long cap) {
        for (long long placed = 0, guard = 0; placed < cap && guard < 40 * cap + 50; ++guard) {
            const int u = xs[bounded(eng, xs.size())];
            const int v = ys[bounded(eng, ys.size())];
            if (u != v && edges.insert(make_edge(u, v)).second) ++placed;
        }
    };
    const long long s1 = static_cast<long long>(spec.V1.size());
    const long long s2 = static_cast<long long>(spec.V2.size());
    fill(spec.V1, spec.V1, std::min(spec.m1, s1 * (s1 - 1) / 2));
    fill(spec.V2, spec.V2, std::min(spec.m2, s2 * (s2 - 1) / 2));
    fill(spec.V1, spec.V2, std::min(spec.m12, s1 * s2));
    int n = 0;
    for (int v : spec.V2) n = std::max(n, v + 1);
    return Graph(n, EdgeList(edges.begin(), edges.end()));
}

} // namespace

TEST_CASE("precondition inequalities") {
    SUBCASE("tight pass at the large-scale constants") {
        PartitionSpec spec = base_spec(64, 64);
        spec.a = 2;
        spec.b = 2;
        spec.nBar = 64;
        const double ln64 = std::log(64.0);
        spec.m1 = static_cast<long long>(std::ceil(20 * 2 * 64 * ln64)); // first bound tight
        spec.m2 = 200000;
        spec.m12 = 200000;
        ConditionReport rep = check_conditions(spec);
        CHECK(rep.items[0].pass);
        CHECK(std::abs(rep.items[0].lhs - rep.items[0].rhs) < 1.0);
    }

    SUBCASE("m1 = 0 fails the first condition") {
        PartitionSpec spec = base_spec(4, 4);
        spec.nBar = 64;
        spec.m1 = 0;
        spec.m2 = spec.m12 = 100000;
        ConditionReport rep = check_conditions(spec);
        CHECK(!rep.items[0].pass);
        CHECK(!rep.all_pass);
    }

    SUBCASE("a > b is rejected") {
        PartitionSpec spec = base_spec(4, 4);
        spec.a = 3;
        spec.b = 2;
        CHECK_THROWS(check_conditions(spec));
    }
}

TEST_CASE("sample_partition") {
    SUBCASE("a = 1 puts everything in one part") {
        PartitionSpec spec = base_spec(10, 10);
        TwoSidedPartition part = sample_partition(spec, 7);
        REQUIRE(part.partsV1.size() == 1);
        CHECK(part.partsV1[0].size() == 10);
    }

    SUBCASE("deterministic in the seed") {
        PartitionSpec spec = base_spec(30, 30);
        spec.a = 2;
        spec.b = 4;
        TwoSidedPartition x = sample_partition(spec, 99);
        TwoSidedPartition y = sample_partition(spec, 99);
        CHECK(x.partsV1 == y.partsV1);
        CHECK(x.partsV2 == y.partsV2);
    }

    SUBCASE("part sizes concentrate") {
        PartitionSpec spec = base_spec(10000, 1);
        spec.a = 2;
        TwoSidedPartition part = sample_partition(spec, 5);
        for (const auto& side : part.partsV1) {
            CHECK(side.size() >= 4600);
            CHECK(side.size() <= 5400);
        }
    }
}

TEST_CASE("verify_bounds") {
    SUBCASE("empty edge sets pass with zero maxima") {
        PartitionSpec spec = base_spec(8, 8);
        spec.a = 2;
        spec.b = 2;
        spec.m1 = spec.m2 = spec.m12 = 10;
        const Graph g(16, {});
        BoundsReport rep = verify_bounds(g, spec, sample_partition(spec, 1));
        CHECK(rep.all_pass());
        CHECK(rep.max11 == 0);
        CHECK(rep.max12 == 0);
    }

    SUBCASE("complete bipartite crossing stays within the cross bound") {
        PartitionSpec spec = base_spec(16, 16);
        spec.a = 2;
        spec.b = 2;
        EdgeList edges;
        for (int u = 0; u < 16; ++u)
            for (int v = 16; v < 32; ++v) edges.push_back({u, v});
        spec.m12 = static_cast<long long>(edges.size());
        spec.m1 = spec.m2 = 1;
        const Graph g(32, edges);
        BoundsReport rep = verify_bounds(g, spec, sample_partition(spec, 3));
        CHECK(rep.pass12);
        CHECK(rep.max12 <= rep.bound12);
    }
}

TEST_CASE("bound statements hold over seeded conforming trials") {
    PartitionSpec spec = base_spec(64, 128);
    spec.a = 2;
    spec.b = 4;
    spec.nBar = 192;
    spec.m1 = 50000;
    spec.m2 = 180000;
    spec.m12 = 45000;
    REQUIRE(check_conditions(spec).all_pass);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint64_t s = mix64(0xb0, static_cast<std::uint64_t>(trial));
        const Graph g = conforming_graph(spec, s);
        BoundsReport rep = verify_bounds(g, spec, sample_partition(spec, s));
        CHECK(rep.all_pass());
    }
}
