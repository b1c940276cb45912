#include <doctest.h>

#include "hoffman/edge_cover.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/psi.hpp"
#include "oracles.hpp"

using namespace hoffman;

namespace {

void check_cover_valid(const WeightedGraph& g, const EdgeCover& cover, int budget) {
    REQUIRE(cover.owner.size() == static_cast<std::size_t>(g.edge_count()));
    std::vector<int> load(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edges()[static_cast<std::size_t>(e)];
        const int owner = cover.owner[static_cast<std::size_t>(e)];
        CHECK((owner == u || owner == v));
        ++load[static_cast<std::size_t>(owner)];
    }
    for (const int l : load) CHECK(l <= budget);
}

} // namespace

TEST_CASE("edge cover feasibility on the reference cases") {
    const auto star = WeightedGraph::simple(4, {{0, 1}, {0, 2}, {0, 3}});
    const auto star1 = find_edge_cover(star, 1);
    CHECK(star1.feasible);
    check_cover_valid(star, star1.cover, 1);

    const auto k3 = make_complete(3);
    const auto k31 = find_edge_cover(k3, 1);
    CHECK(k31.feasible);
    check_cover_valid(k3, k31.cover, 1);

    const auto k4 = make_complete(4);
    const auto k41 = find_edge_cover(k4, 1);
    CHECK(!k41.feasible);
    // Witness must be dense: more edges than budget * vertices.
    CHECK(k41.witness.edge_indices.size() > 1 * k41.witness.vertices.size());

    CHECK(find_edge_cover(k4, 2).feasible);
    CHECK(find_edge_cover(WeightedGraph::simple(3, {}), 0).feasible);
}

TEST_CASE("feasibility is monotone in the budget and matches density") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto g = make_erdos_renyi(7, 0.5, seed + 50);
        bool prev = false;
        for (int c = 0; c <= 4; ++c) {
            const auto res = find_edge_cover(g, c);
            CHECK(res.feasible == oracles::brute_cover_feasible(g, c));
            if (prev) CHECK(res.feasible); // once feasible, stays feasible
            prev = res.feasible;
            if (res.feasible)
                check_cover_valid(g, res.cover, c);
            else
                CHECK(res.witness.edge_indices.size() >
                      static_cast<std::size_t>(c) * res.witness.vertices.size());
        }
    }
}

TEST_CASE("structural covers meet their budgets") {
    // Trees peel to load 1.
    const auto tree = WeightedGraph::simple(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
    const EdgeCover peel = default_cover(tree, PsiKind::degeneracy_plus_1);
    CHECK(peel.max_load == 1);
    check_cover_valid(tree, peel, 1);

    const EdgeCover c5 = default_cover(make_cycle(5), PsiKind::maxdeg_plus_1);
    CHECK(c5.max_load == 1);

    const EdgeCover k4 = default_cover(make_complete(4), PsiKind::maxdeg_plus_1);
    CHECK(k4.max_load == 2);
    check_cover_valid(make_complete(4), k4, 2);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto g = make_erdos_renyi(9, 0.5, seed + 70);
        const GraphStats st = stats(g);
        const EdgeCover dg = default_cover(g, PsiKind::degeneracy_plus_1);
        check_cover_valid(g, dg, st.degeneracy == 0 ? 0 : st.degeneracy);
        const EdgeCover bal = default_cover(g, PsiKind::maxdeg_plus_1);
        check_cover_valid(g, bal, (st.max_degree + 1) / 2);
    }

    CHECK_THROWS_AS(default_cover(tree, PsiKind::exact_chromatic), Error);
}

TEST_CASE("psi values") {
    const auto c5 = make_cycle(5);
    CHECK(psi_value(PsiKind::maxdeg_plus_1, c5) == 3);
    CHECK(psi_value(PsiKind::degeneracy_plus_1, c5) == 3);
    CHECK(psi_value(PsiKind::exact_chromatic, c5) == 3);

    const auto tree = WeightedGraph::simple(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(psi_value(PsiKind::degeneracy_plus_1, tree) == 2);

    // Independent sets give 1 for every kind.
    for (const auto kind :
         {PsiKind::degeneracy_plus_1, PsiKind::maxdeg_plus_1, PsiKind::exact_chromatic}) {
        CHECK(psi_value(kind, WeightedGraph::simple(4, {})) == 1);
        CHECK(psi_value(kind, c5, {0, 2}) == 1);
    }
    CHECK(psi_value(PsiKind::maxdeg_plus_1, c5, {0, 1, 2, 3, 4}) == 3);
}

TEST_CASE("psi dominates the chromatic number") {
    for (const auto& g : enumerate_graphs(5)) {
        const int chi = oracles::brute_chromatic(g);
        CHECK(psi_value(PsiKind::degeneracy_plus_1, g) >= chi);
        CHECK(psi_value(PsiKind::maxdeg_plus_1, g) >= chi);
        CHECK(psi_value(PsiKind::exact_chromatic, g) == chi);
    }
}

TEST_CASE("psi kind names round trip") {
    for (const auto kind :
         {PsiKind::degeneracy_plus_1, PsiKind::maxdeg_plus_1, PsiKind::exact_chromatic})
        CHECK(parse_psi_kind(to_string(kind)) == kind);
    CHECK_THROWS_AS(parse_psi_kind("nope"), ParseError);
}
