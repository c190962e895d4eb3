#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "congest/generators.hpp"
#include "congest/k4.hpp"
#include "congest/kp.hpp"
#include "congest/oracle.hpp"

using namespace congest;

TEST_CASE("kp driver on degenerate graphs") {
    const Config cfg = Config::desk();

    SUBCASE("a single K_p yields exactly one clique") {
        for (int p : {5, 6}) {
            RoundLedger ledger;
            CliqueSet found = kp_list(gen_complete(p), p, 1, cfg, ledger);
            REQUIRE(found.size() == 1);
            CHECK(static_cast<int>(found.begin()->size()) == p);
        }
    }

    SUBCASE("K_{p-1} plus isolated nodes yields nothing") {
        EdgeList edges = gen_complete(4).edges();
        const Graph g(9, edges);
        RoundLedger ledger;
        CHECK(kp_list(g, 5, 1, cfg, ledger).empty());
    }

    SUBCASE("K_6 with p=5 lists the six 5-subsets") {
        RoundLedger ledger;
        CHECK(kp_list(gen_complete(6), 5, 1, cfg, ledger).size() == 6);
    }

    SUBCASE("p below 5 is rejected") {
        RoundLedger ledger;
        CHECK_THROWS(kp_list(gen_complete(6), 4, 1, cfg, ledger));
    }
}

TEST_CASE("kp driver matches the oracle with planted cliques") {
    const Config cfg = Config::desk();
    for (int seed = 1; seed <= 3; ++seed) {
        GeneratedGraph gg = gen_planted_clique_overlay(80, 0.3, 5, 5, seed);
        RoundLedger ledger;
        ClaimsReport claims;
        CliqueSet found = kp_list(gg.graph, 5, seed, cfg, ledger, &claims);
        CHECK(found == enumerate_cliques(gg.graph, 5));
        CHECK(claims.all_pass());
        for (const auto& planted : gg.planted) {
            std::vector<int> sorted = planted;
            std::sort(sorted.begin(), sorted.end());
            CHECK(found.count(sorted) == 1);
        }
    }
}

TEST_CASE("k4 driver on degenerate graphs") {
    const Config cfg = Config::desk();

    SUBCASE("K_4 itself") {
        RoundLedger ledger;
        CliqueSet found = k4_list(gen_complete(4), 1, cfg, ledger);
        REQUIRE(found.size() == 1);
        CHECK(*found.begin() == std::vector<int>{0, 1, 2, 3});
    }

    SUBCASE("triangle plus pendant has no K_4") {
        const Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
        RoundLedger ledger;
        CHECK(k4_list(g, 1, cfg, ledger).empty());
    }
}

TEST_CASE("k4 driver matches the oracle across cluster shapes") {
    const Config cfg = Config::desk();
    for (int seed = 1; seed <= 2; ++seed) {
        GeneratedGraph gg = gen_planted_clique_overlay(100, 0.25, 8, 4, seed);
        RoundLedger ledger;
        ClaimsReport claims;
        CliqueSet found = k4_list(gg.graph, seed, cfg, ledger, &claims);
        CHECK(found == enumerate_cliques(gg.graph, 4));
        CHECK(claims.all_pass());
    }
    // bridged expanders force inter-cluster work
    for (int seed = 1; seed <= 2; ++seed) {
        const Graph g = gen_two_expanders_bridged(80, 0.4, 6, seed);
        RoundLedger ledger;
        ClaimsReport claims;
        CHECK(k4_list(g, seed, cfg, ledger, &claims) == enumerate_cliques(g, 4));
        CHECK(claims.all_pass());
    }
}

TEST_CASE("faithful profile still lists correctly through its fallback paths") {
    const Config cfg = Config::faithful();
    const Graph g = gen_erdos_renyi(70, 0.35, 11);
    RoundLedger lkp, lk4;
    CHECK(kp_list(g, 5, 2, cfg, lkp) == enumerate_cliques(g, 5));
    CHECK(k4_list(g, 2, cfg, lk4) == enumerate_cliques(g, 4));
}

TEST_CASE("runs are deterministic in the seed") {
    const Config cfg = Config::desk();
    const Graph g = gen_erdos_renyi(60, 0.35, 5);
    RoundLedger a, b;
    ClaimsReport ca, cb;
    CliqueSet x = k4_list(g, 9, cfg, a, &ca);
    CliqueSet y = k4_list(g, 9, cfg, b, &cb);
    CHECK(x == y);
    CHECK(a.total_rounds() == b.total_rounds());
    CHECK(a.to_csv() == b.to_csv());
    CHECK(ca.checks.size() == cb.checks.size());
}

TEST_CASE("round ledgers carry the pinned phase labels") {
    const Config cfg = Config::desk();
    // dense bridged expanders survive the prune and give multiple clusters,
    // so the cover recursion runs
    const Graph g = gen_two_expanders_bridged(100, 0.6, 8, 3);
    RoundLedger ledger;
    k4_list(g, 3, cfg, ledger);
    bool sawCover = false, sawPart = false;
    for (const auto& [label, stats] : ledger.phases()) {
        (void)stats;
        if (label.rfind("k4.cover", 0) == 0) sawCover = true;
        if (label.rfind("k4.part", 0) == 0) sawPart = true;
    }
    CHECK(sawCover);
    CHECK(sawPart);
}
