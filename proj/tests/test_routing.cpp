#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "congest/errors.hpp"
#include "congest/generators.hpp"
#include "congest/routing.hpp"
#include "congest/rng.hpp"

using namespace congest;

namespace {

std::vector<int> everyone(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

} // namespace

TEST_CASE("compute_load") {
    const Graph k8 = gen_complete(8);
    ClusterView cluster(k8, everyone(8), ViewMode::Induced);

    SUBCASE("empty batch") {
        RoutingBatch batch;
        batch.cluster = &cluster;
        CHECK(compute_load(batch) == Rational(0));
    }

    SUBCASE("degree-proportional batch has load one") {
        RoutingBatch batch;
        batch.cluster = &cluster;
        for (int v = 0; v < 8; ++v)
            for (int i = 0; i < 7; ++i) batch.messages.push_back({v, (v + 1 + i) % 8, {}});
        CHECK(compute_load(batch) == Rational(1));
    }

    SUBCASE("one hot receiver dominates") {
        EdgeList edges;
        for (int v = 1; v <= 4; ++v) edges.push_back({0, v});
        edges.push_back({1, 2});
        edges.push_back({3, 4});
        const Graph g(5, edges);
        ClusterView view(g, everyone(5), ViewMode::Induced);
        RoutingBatch batch;
        batch.cluster = &view;
        for (int i = 0; i < 10; ++i) batch.messages.push_back({1 + (i % 4), 0, {}});
        CHECK(compute_load(batch) == Rational(10, 4));
    }
}

TEST_CASE("route charges kappa_route and preprocessing once per cluster") {
    const Config cfg;
    const Graph k8 = gen_complete(8);
    ClusterView cluster(k8, everyone(8), ViewMode::Induced);

    RoutingBatch batch;
    batch.cluster = &cluster;
    batch.L = Rational(1);
    auto eng = make_engine(42);
    std::vector<int> received(8, 0);
    for (int v = 0; v < 8; ++v)
        for (int i = 0; i < 7; ++i) {
            int dst = v;
            while (dst == v || received[dst] >= 7) dst = static_cast<int>(bounded(eng, 8));
            ++received[dst];
            batch.messages.push_back({v, dst, Message{{v}, 0}});
        }

    RoundLedger ledger;
    auto delivered = route(batch, ledger, cfg, "r", "c0");
    CHECK(ledger.phase("r").rounds == 27); // ceil(L) * log2(8)^3
    CHECK(ledger.phase("route.pre").rounds == Config::route_pre_rounds(8));
    std::size_t count = 0;
    for (const auto& [dst, msgs] : delivered) count += msgs.size();
    CHECK(count == batch.messages.size());

    // second batch in the same cluster pays no further preprocessing
    RoutingBatch again = batch;
    route(again, ledger, cfg, "r", "c0");
    CHECK(ledger.phase("route.pre").rounds == Config::route_pre_rounds(8));
    CHECK(ledger.phase("r").rounds == 54);
}

TEST_CASE("overloaded destination is rejected by name") {
    const Config cfg;
    const Graph k4 = gen_complete(4);
    ClusterView cluster(k4, everyone(4), ViewMode::Induced);
    RoutingBatch batch;
    batch.cluster = &cluster;
    batch.L = Rational(1);
    for (int i = 0; i < 2 * 3 + 1; ++i) batch.messages.push_back({1 + (i % 3), 0, {}});
    RoundLedger ledger;
    CHECK_THROWS_AS(route(batch, ledger, cfg, "r", "c1"), ProtocolViolation);
}

TEST_CASE("route_counts matches the message-level cost") {
    const Config cfg;
    const Graph k8 = gen_complete(8);
    ClusterView cluster(k8, everyone(8), ViewMode::Induced);
    std::map<int, long long> sent, received;
    for (int v = 0; v < 8; ++v) sent[v] = received[v] = 7;
    CHECK(counts_load(cluster, sent, received) == Rational(1));
    RoundLedger ledger;
    route_counts(cluster, sent, received, Rational(1), ledger, cfg, "r", "c2");
    CHECK(ledger.phase("r").rounds == 27);
}
