#include <doctest.h>

#include "hoffman/coloring.hpp"
#include "hoffman/graph.hpp"
#include "oracles.hpp"

using namespace hoffman;

TEST_CASE("chromatic number of the named graphs") {
    CHECK(chromatic_number(make_complete(5)).chromatic_number == 5);
    CHECK(chromatic_number(make_petersen()).chromatic_number == 3);
    CHECK(chromatic_number(make_complete_bipartite(3, 4)).chromatic_number == 2);
    CHECK(chromatic_number(WeightedGraph::simple(4, {})).chromatic_number == 1);

    // C5: an exhaustive check shows 2 colors are impossible, 3 suffice.
    const auto c5 = make_cycle(5);
    CHECK(!oracles::brute_colorable(c5, 2));
    CHECK(oracles::brute_colorable(c5, 3));
    CHECK(chromatic_number(c5).chromatic_number == 3);

    CHECK(!oracles::brute_colorable(make_petersen(), 2));
}

TEST_CASE("certificates are proper and use the reported color count") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto g = make_erdos_renyi(8, 0.5, seed);
        const ChromaticResult res = chromatic_number(g);
        CHECK(is_proper(g, res.witness.color));
        int used = 0;
        for (const int c : res.witness.color) used = std::max(used, c + 1);
        CHECK(used == res.chromatic_number);
    }
}

TEST_CASE("branch and bound agrees with plain enumeration") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto g = make_erdos_renyi(8, 0.45, seed + 100);
        CHECK(chromatic_number(g).chromatic_number == oracles::brute_chromatic(g));
    }
    for (const auto& g : enumerate_graphs(5))
        CHECK(chromatic_number(g).chromatic_number == oracles::brute_chromatic(g));
}

TEST_CASE("odd cycles need three colors, even cycles two") {
    for (int n = 4; n <= 9; ++n)
        CHECK(chromatic_number(make_cycle(n)).chromatic_number == (n % 2 == 0 ? 2 : 3));
}

TEST_CASE("the size cap is enforced") {
    CHECK_THROWS_AS(chromatic_number(WeightedGraph::simple(41, {}), 40), CapExceeded);
}
