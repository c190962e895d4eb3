#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "congest/claims.hpp"
#include "congest/config.hpp"
#include "congest/generators.hpp"
#include "congest/io.hpp"

using namespace congest;

TEST_CASE("generator families") {
    SUBCASE("complete n=6 has 15 edges") { CHECK(gen_complete(6).edge_count() == 15); }

    SUBCASE("erdos-renyi edge count concentrates") {
        // mean C(100,2)*0.3 = 1485, sigma ~ 32.2; check 6 sigma
        const Graph g = gen_erdos_renyi(100, 0.3, 12345);
        CHECK(g.edge_count() > 1485 - 194);
        CHECK(g.edge_count() < 1485 + 194);
    }

    SUBCASE("planted overlay contains its clique edges") {
        GeneratedGraph gg = gen_planted_clique_overlay(30, 0.1, 1, 5, 7);
        REQUIRE(gg.planted.size() == 1);
        const auto& clique = gg.planted[0];
        REQUIRE(clique.size() == 5);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                CHECK(gg.graph.has_edge(clique[i], clique[j]));
    }

    SUBCASE("random regular") {
        const Graph g = gen_random_regular(20, 4, 3);
        for (int v = 0; v < 20; ++v) CHECK(g.degree(v) == 4);
        CHECK_THROWS(gen_random_regular(5, 3, 1)); // odd degree sum
    }

    SUBCASE("dispatcher") {
        CHECK(generate("barbell", 8, {}, 1).graph.edge_count() == 13);
        CHECK_THROWS(generate("no-such-family", 8, {}, 1));
        // determinism
        const Graph a = generate("erdos-renyi", 40, {{"p_edge", 0.4}}, 77).graph;
        const Graph b = generate("erdos-renyi", 40, {{"p_edge", 0.4}}, 77).graph;
        CHECK(a.edges() == b.edges());
    }
}

TEST_CASE("graph IO round trips") {
    const Graph g = gen_erdos_renyi(25, 0.3, 5);
    const std::string dir = std::filesystem::temp_directory_path().string();

    SUBCASE("edge list") {
        const std::string path = dir + "/congest_io_test.edges";
        write_edge_list(g, path);
        const Graph back = read_edge_list(path);
        CHECK(back.node_count() == g.node_count());
        CHECK(back.edges() == g.edges());
        std::remove(path.c_str());
    }

    SUBCASE("json") {
        const std::string path = dir + "/congest_io_test.json";
        nlohmann::json meta;
        meta["family"] = "erdos-renyi";
        write_graph_json(g, path, meta);
        const Graph back = read_graph_json(path);
        CHECK(back.node_count() == g.node_count());
        CHECK(back.edges() == g.edges());
        std::remove(path.c_str());
    }
}

TEST_CASE("claims report aggregation and CSV shape") {
    ClaimsReport report;
    report.add("alpha", 1, 2, true);
    report.add("beta", 5, 3, false, false, "precondition absent");
    CHECK(report.all_pass()); // inapplicable failures do not gate
    report.add("gamma", 5, 3, false);
    CHECK(!report.all_pass());
    const std::string csv = report.to_csv();
    CHECK(csv.find("claim,lhs,rhs,applicable,pass") == 0);
    CHECK(csv.find("\"gamma\"") != std::string::npos);
    CHECK(csv.find("FAIL") != std::string::npos);
}

TEST_CASE("config profiles") {
    const Config faithful = Config::faithful();
    CHECK(faithful.beta == 32.0);
    CHECK(faithful.gamma == 8.0);
    CHECK(faithful.gamma_prime == 8.0);
    const Config desk = Config::desk();
    CHECK(desk.beta == 2.0);
    CHECK(desk.W == 2);
    CHECK(desk.B == 1);
    CHECK(Config::frac_threshold(256, 4) == doctest::Approx(16.0));
    CHECK(desk.phi_target(256) == doctest::Approx(1.0 / 64.0));
}
