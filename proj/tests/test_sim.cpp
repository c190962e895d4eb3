#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "congest/generators.hpp"
#include "congest/ledger.hpp"
#include "congest/sim.hpp"

using namespace congest;

TEST_CASE("local_exchange charges the max per-edge load") {
    const Config cfg;
    const Graph c4 = gen_cycle(4);

    SUBCASE("one message per edge direction costs one round") {
        RoundLedger ledger;
        Outbox outbox(4);
        for (int v = 0; v < 4; ++v)
            for (int u : c4.neighbors(v)) outbox[v].push_back({u, Message{{v}, 0}});
        Inbox inbox = local_exchange(c4, outbox, ledger, cfg, "x");
        CHECK(ledger.phase("x").rounds == 1);
        CHECK(inbox[0].size() == 2);
    }

    SUBCASE("seven messages over one edge cost seven rounds") {
        RoundLedger ledger;
        Outbox outbox(4);
        for (int i = 0; i < 7; ++i) outbox[0].push_back({1, Message{{i}, 0}});
        local_exchange(c4, outbox, ledger, cfg, "x");
        CHECK(ledger.phase("x").rounds == 7);
    }

    SUBCASE("empty outbox is free") {
        RoundLedger ledger;
        local_exchange(c4, Outbox(4), ledger, cfg, "x");
        CHECK(ledger.phase("x").rounds == 0);
        CHECK(ledger.total_rounds() == 0);
    }
}

TEST_CASE("exhaustive neighborhood learn") {
    const Config cfg;

    SUBCASE("K_4 center learns the full triangle among its neighbors") {
        const Graph k4 = gen_complete(4);
        RoundLedger ledger;
        EdgeList learned = exhaustive_neighborhood_learn(k4, 0, {1, 2, 3}, ledger, cfg, "x");
        std::sort(learned.begin(), learned.end());
        CHECK(learned == EdgeList{{1, 2}, {1, 3}, {2, 3}});
        CHECK(ledger.phase("x").rounds == 6);
    }

    SUBCASE("star leaves share no edges") {
        EdgeList star;
        for (int v = 1; v < 6; ++v) star.push_back({0, v});
        const Graph g(6, star);
        RoundLedger ledger;
        CHECK(exhaustive_neighborhood_learn(g, 0, {1, 2, 3, 4, 5}, ledger, cfg, "x").empty());
    }

    SUBCASE("empty target set is free") {
        const Graph k4 = gen_complete(4);
        RoundLedger ledger;
        CHECK(exhaustive_neighborhood_learn(k4, 0, {}, ledger, cfg, "x").empty());
        CHECK(ledger.total_rounds() == 0);
    }
}

TEST_CASE("parallel_compose is max over nodes of their summed phase costs") {
    CHECK(parallel_compose({{{0, 1}, 10}, {{2, 3}, 10}}) == 10);
    CHECK(parallel_compose({{{0, 1}, 10}, {{0, 1}, 10}}) == 20);
    CHECK(parallel_compose({{{0, 1}, 5}, {{0, 2}, 7}, {{0, 3}, 9}}) == 21);
    CHECK(parallel_compose({}) == 0);
}

TEST_CASE("ledger merge and csv") {
    RoundLedger a, b;
    a.charge("p1", 5);
    a.record_traffic("p1", 3, 3, 1);
    b.charge("p1", 2);
    b.charge("p2", 4);
    a.merge(b);
    CHECK(a.phase("p1").rounds == 7);
    CHECK(a.phase("p2").rounds == 4);
    CHECK(a.total_rounds() == 11);
    const std::string csv = a.to_csv();
    CHECK(csv.find("phase,rounds,msgs_sent,msgs_received,max_edge_load") == 0);
    CHECK(csv.find("\"p1\",7,3,3,1") != std::string::npos);
}
