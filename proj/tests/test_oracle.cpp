#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "congest/generators.hpp"
#include "congest/oracle.hpp"

using namespace congest;

namespace {

// Petersen graph: outer 5-cycle, inner pentagram, spokes.
Graph petersen() {
    EdgeList edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));
        edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
        edges.push_back(make_edge(i, 5 + i));
    }
    return Graph(10, edges);
}

} // namespace

TEST_CASE("enumerate_cliques on hand graphs") {
    CHECK(enumerate_cliques(gen_complete(5), 4).size() == 5);
    CHECK(enumerate_cliques(gen_cycle(6), 3).empty());
    CHECK(enumerate_cliques(petersen(), 3).empty());
    CHECK(enumerate_cliques(gen_complete(6), 5).size() == 6);
}

TEST_CASE("degeneracy enumeration agrees with naive nested loops") {
    for (int seed = 1; seed <= 8; ++seed) {
        const Graph g = gen_erdos_renyi(18, 0.45, seed);
        for (int p = 3; p <= 5; ++p) CHECK(enumerate_cliques(g, p) == enumerate_cliques_naive(g, p));
    }
}

TEST_CASE("cliques_containing matches enumeration filtered through v") {
    for (int seed = 1; seed <= 5; ++seed) {
        const Graph g = gen_erdos_renyi(20, 0.5, seed);
        const int v = 0;
        const std::vector<int>& t = g.neighbors(v);
        EdgeList learned;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j)
                if (g.has_edge(t[i], t[j])) learned.push_back(make_edge(t[i], t[j]));
        CliqueSet through = cliques_containing(v, t, learned, 4);
        CliqueSet expected;
        for (const auto& clique : enumerate_cliques(g, 4))
            if (std::find(clique.begin(), clique.end(), v) != clique.end())
                expected.insert(clique);
        CHECK(through == expected);
    }
}

TEST_CASE("qualifying_cliques follows the split-edge rules") {
    SUBCASE("no cross structure degenerates to intra enumeration") {
        const Graph k5 = gen_complete(5);
        std::vector<int> inside = {0, 1, 2, 3, 4};
        CliqueSet got = qualifying_cliques(5, inside, k5.edges(), {}, {}, 4, 4);
        CHECK(got == enumerate_cliques(k5, 4));
    }

    SUBCASE("planted cross K_4 with two inside and two outside nodes") {
        // inside {0,1}, outside {5,6}; all six pairs wired via the right sets
        std::vector<int> inside = {0, 1};
        EdgeList ec = {{0, 1}};
        EdgeList ebar = {{0, 5}, {0, 6}, {1, 5}, {1, 6}};
        EdgeList eprime = {{5, 6}};
        CliqueSet got = qualifying_cliques(10, inside, ec, ebar, eprime, 4, 2);
        REQUIRE(got.size() == 1);
        CHECK(*got.begin() == std::vector<int>{0, 1, 5, 6});
    }

    SUBCASE("a missing outside edge disqualifies the clique") {
        std::vector<int> inside = {0, 1};
        EdgeList ec = {{0, 1}};
        EdgeList ebar = {{0, 5}, {0, 6}, {1, 5}, {1, 6}};
        CHECK(qualifying_cliques(10, inside, ec, ebar, {}, 4, 2).empty());
    }

    SUBCASE("virtual padding IDs never qualify") {
        std::vector<int> inside = {0, 1};
        EdgeList ec = {{0, 1}};
        EdgeList ebar = {{0, 10}, {0, 11}, {1, 10}, {1, 11}};
        EdgeList eprime = {{10, 11}};
        // IDs >= n = 10 are virtual
        CHECK(qualifying_cliques(10, inside, ec, ebar, eprime, 4, 2).empty());
    }
}
