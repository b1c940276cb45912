#include <doctest.h>

#include "hoffman/bounds.hpp"
#include "hoffman/coloring.hpp"
#include "hoffman/cover_family.hpp"
#include "hoffman/graph.hpp"
#include "oracles.hpp"

using namespace hoffman;

namespace {

CoverFamily family_of(const WeightedGraph& g, PsiKind psi, Rational alpha,
                      std::vector<std::vector<int>> subsets) {
    CoverFamily family;
    family.psi = psi;
    family.alpha = alpha;
    family.subsets = std::move(subsets);
    for (const auto& s : family.subsets) family.psi_values.push_back(psi_value(psi, g, s));
    return family;
}

CoverFamily color_class_family(const WeightedGraph& g, PsiKind psi) {
    const ChromaticResult res = chromatic_number(g);
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(res.chromatic_number));
    for (int v = 0; v < g.vertex_count(); ++v)
        classes[static_cast<std::size_t>(res.witness.color[static_cast<std::size_t>(v)])].push_back(v);
    return family_of(g, psi, Rational(0), std::move(classes));
}

} // namespace

TEST_CASE("color classes pass at alpha zero with k = chi") {
    for (const auto& g : {make_cycle(5), make_petersen(), make_erdos_renyi(7, 0.5, 3)}) {
        const CoverFamily family = color_class_family(g, PsiKind::maxdeg_plus_1);
        CHECK(verify_cover_family(g, family, family.psi, Rational(0)).pass);
        CHECK(verify_relaxed_cover(g, family, family.psi, Rational(0)).pass);
        CHECK(family.size() == chromatic_number(g).chromatic_number);
    }
}

TEST_CASE("the K2 reference families") {
    const auto k2 = make_complete(2);
    const CoverFamily twice = family_of(k2, PsiKind::maxdeg_plus_1, Rational(1, 2), {{0, 1}, {0, 1}});
    CHECK(verify_cover_family(k2, twice, PsiKind::maxdeg_plus_1, Rational(1, 2)).pass);
    CHECK(verify_relaxed_cover(k2, twice, PsiKind::maxdeg_plus_1, Rational(1, 2)).pass);

    const CoverFamily once = family_of(k2, PsiKind::maxdeg_plus_1, Rational(1, 2), {{0, 1}});
    const FamilyCheck check = verify_cover_family(k2, once, PsiKind::maxdeg_plus_1, Rational(1, 2));
    CHECK(!check.pass); // h_v = 1/2 < 1
    CHECK(!check.violations.empty());
}

TEST_CASE("relaxed verification checks the edge-count inequality") {
    const auto k3 = make_complete(3);
    // |E| = 3 > 0.3 * 3 * 3 = 2.7, and masses are only 1/3.
    const CoverFamily whole = family_of(k3, PsiKind::maxdeg_plus_1, Rational(3, 10), {{0, 1, 2}});
    const FamilyCheck relaxed = verify_relaxed_cover(k3, whole, PsiKind::maxdeg_plus_1, Rational(3, 10));
    CHECK(!relaxed.pass);

    // With alpha = 1/2 the inequality 3 <= (1/2)*3*3 holds, but masses are 1/3 != 1.
    const FamilyCheck half = verify_relaxed_cover(k3, whole, PsiKind::maxdeg_plus_1, Rational(1, 2));
    CHECK(!half.pass);
    // Three copies make every mass exactly 1 and keep the edge inequality.
    const CoverFamily tripled =
        family_of(k3, PsiKind::maxdeg_plus_1, Rational(1, 2), {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
    CHECK(verify_relaxed_cover(k3, tripled, PsiKind::maxdeg_plus_1, Rational(1, 2)).pass);
}

TEST_CASE("exact covering numbers on the reference cases") {
    const auto edgeless = WeightedGraph::simple(4, {});
    const auto trivial = covering_number_exact(edgeless, PsiKind::maxdeg_plus_1, Rational(1));
    CHECK(trivial.k == 1);
    CHECK(trivial.family.subsets == std::vector<std::vector<int>>{{0, 1, 2, 3}});

    const auto k2 = covering_number_exact(make_complete(2), PsiKind::maxdeg_plus_1, Rational(1, 2));
    CHECK(k2.k == 2);
    CHECK(covering_bound(make_complete(2), 0.5) <= k2.k + 1e-9);

    const auto k3 = covering_number_exact(make_complete(3), PsiKind::maxdeg_plus_1, Rational(1, 2));
    CHECK(k3.k == 3);
    CHECK(covering_bound(make_complete(3), 0.5) == doctest::Approx(1.5));
}

TEST_CASE("witnesses re-verify and bound the covering theorem") {
    for (const auto& g : enumerate_graphs(4)) {
        for (const auto& [psi, alpha] :
             std::vector<std::pair<PsiKind, Rational>>{{PsiKind::degeneracy_plus_1, Rational(1)},
                                                       {PsiKind::maxdeg_plus_1, Rational(1, 2)}}) {
            const auto res = covering_number_exact(g, psi, alpha);
            CHECK(verify_cover_family(g, res.family, psi, alpha).pass);
            if (g.edge_count() > 0)
                CHECK(res.k >= covering_bound(g, alpha.to_double()) - 1e-9);
            const int chi = oracles::brute_chromatic(g);
            CHECK(res.k * res.k >= chi); // k >= sqrt(chi)
            CHECK(res.k <= chi);
        }
    }
}

TEST_CASE("covering number is monotone in alpha") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const auto g = make_erdos_renyi(6, 0.5, seed + 40);
        int prev = -1;
        for (const Rational alpha : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)}) {
            const int k = covering_number_exact(g, PsiKind::maxdeg_plus_1, alpha).k;
            if (prev >= 0) CHECK(k <= prev);
            prev = k;
        }
    }
}

TEST_CASE("alpha zero reduces to the chromatic number") {
    for (const auto& g : enumerate_graphs(4))
        CHECK(covering_number_exact(g, PsiKind::maxdeg_plus_1, Rational(0)).k ==
              oracles::brute_chromatic(g));
}

TEST_CASE("global budget mode uses psi of the whole graph") {
    // K3 under the global reading: every subset gets budget
    // floor(alpha * psi(G)) = floor(3/2) = 1, so the whole set qualifies.
    const auto g = make_complete(3);
    const auto global =
        covering_number_exact(g, PsiKind::maxdeg_plus_1, Rational(1, 2), -1, BudgetMode::global);
    CHECK(global.k == 3);
    CHECK(verify_cover_family(g, global.family, PsiKind::maxdeg_plus_1, Rational(1, 2),
                              BudgetMode::global)
              .pass);
}

TEST_CASE("distinct-subset mode still finds minimal families") {
    const auto k2 = make_complete(2);
    const auto distinct = covering_number_exact(k2, PsiKind::maxdeg_plus_1, Rational(1, 2), -1,
                                                BudgetMode::per_subset, false);
    CHECK(distinct.k == 2); // {{0}, {1}}
    CHECK(distinct.family.subsets == std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("caps and degenerate inputs") {
    CHECK_THROWS_AS(covering_number_exact(WeightedGraph::simple(8, {}), PsiKind::maxdeg_plus_1,
                                          Rational(1)),
                    CapExceeded);
    CHECK_THROWS_AS(covering_number_exact(make_complete(3), PsiKind::maxdeg_plus_1, Rational(1), 1),
                    Error); // no family of size 1
}
