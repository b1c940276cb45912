#include <doctest.h>

#include <cmath>

#include "hoffman/coloring.hpp"
#include "hoffman/cover_family.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/rounding.hpp"
#include "hoffman/spectral.hpp"

using namespace hoffman;

namespace {

CoverFamily family_of(const WeightedGraph& g, PsiKind psi, Rational alpha,
                      std::vector<std::vector<int>> subsets) {
    CoverFamily family;
    family.psi = psi;
    family.alpha = alpha;
    family.subsets = std::move(subsets);
    for (const auto& s : family.subsets) {
        family.psi_values.push_back(psi_value(psi, g, s));
        const WeightedGraph sub = g.induced(s);
        const long long budget = (alpha * Rational(family.psi_values.back())).floor();
        const auto cover = find_edge_cover(sub, static_cast<int>(std::max(0LL, budget)));
        family.covers.push_back(cover.feasible ? cover.cover : EdgeCover{});
    }
    return family;
}

CoverFamily color_class_family(const WeightedGraph& g) {
    const ChromaticResult res = chromatic_number(g);
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(res.chromatic_number));
    for (int v = 0; v < g.vertex_count(); ++v)
        classes[static_cast<std::size_t>(res.witness.color[static_cast<std::size_t>(v)])].push_back(v);
    return family_of(g, PsiKind::maxdeg_plus_1, Rational(0), std::move(classes));
}

} // namespace

TEST_CASE("rounding probabilities on the reference families") {
    // Disjoint color classes: a single subset per vertex, probability 1.
    const auto c5 = make_cycle(5);
    const CoverFamily classes = color_class_family(c5);
    const RoundingDistribution dist = rounding_distribution(c5, classes);
    for (const auto& row : dist.choices) {
        REQUIRE(row.size() == 1);
        CHECK(row[0].second == Rational(1));
    }

    // K2 with {V, V}: both vertices split 1/2, 1/2.
    const auto k2 = make_complete(2);
    const CoverFamily twice = family_of(k2, PsiKind::maxdeg_plus_1, Rational(1, 2), {{0, 1}, {0, 1}});
    const RoundingDistribution half = rounding_distribution(k2, twice);
    for (const auto& row : half.choices) {
        REQUIRE(row.size() == 2);
        CHECK(row[0].second == Rational(1, 2));
        CHECK(row[1].second == Rational(1, 2));
    }

    // Vertex 0 in a psi=1 singleton and inside K3 (psi=3): h = 4/3,
    // probabilities (3/4, 1/4).
    const auto k3 = make_complete(3);
    const CoverFamily mixed =
        family_of(k3, PsiKind::maxdeg_plus_1, Rational(1, 2), {{0}, {0, 1, 2}, {1}, {2}});
    const RoundingDistribution md = rounding_distribution(k3, mixed);
    REQUIRE(md.choices[0].size() == 2);
    CHECK(md.choices[0][0].second == Rational(3, 4));
    CHECK(md.choices[0][1].second == Rational(1, 4));

    // A vertex outside every subset is an error.
    const CoverFamily missing = family_of(k2, PsiKind::maxdeg_plus_1, Rational(1), {{0}});
    CHECK_THROWS_AS(rounding_distribution(k2, missing), Error);
}

TEST_CASE("simulation matches the closed-form expectation on K2") {
    const auto k2 = make_complete(2);
    const CoverFamily twice = family_of(k2, PsiKind::maxdeg_plus_1, Rational(1, 2), {{0, 1}, {0, 1}});
    const SimulationStats stats = simulate(k2, twice, 10000, 99);
    CHECK(stats.expectation_exact == Rational(1, 2));
    REQUIRE(stats.expectation_cover.has_value());
    CHECK(*stats.expectation_cover == Rational(1, 2));
    CHECK(std::abs(stats.mean - 0.5) <= 4.0 * stats.standard_error);
    CHECK(stats.mean == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("color classes never produce bad edges") {
    const auto g = make_erdos_renyi(7, 0.5, 5);
    const CoverFamily classes = color_class_family(g);
    const SimulationStats stats = simulate(g, classes, 500, 7);
    CHECK(stats.mean == 0.0);
    CHECK(stats.expectation_exact == Rational(0));
    CHECK(stats.histogram.size() == 1);
    CHECK(stats.histogram.at(0) == 500);
}

TEST_CASE("simulation is bit-reproducible under one seed") {
    const auto k3 = make_complete(3);
    const CoverFamily tripled =
        family_of(k3, PsiKind::maxdeg_plus_1, Rational(1, 2), {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
    const SimulationStats a = simulate(k3, tripled, 4000, 123);
    const SimulationStats b = simulate(k3, tripled, 4000, 123);
    CHECK(a.mean == b.mean);
    CHECK(a.standard_error == b.standard_error);
    CHECK(a.histogram == b.histogram);
    const SimulationStats c = simulate(k3, tripled, 4000, 124);
    CHECK(a.expectation_exact == c.expectation_exact);
}

TEST_CASE("empirical means stay within four standard errors") {
    const auto g = make_erdos_renyi(6, 0.6, 31);
    const auto res = covering_number_exact(g, PsiKind::maxdeg_plus_1, Rational(1, 2));
    const SimulationStats stats = simulate(g, res.family, 10000, 2);
    const double expectation = stats.expectation_exact.to_double();
    CHECK(std::abs(stats.mean - expectation) <= 4.0 * stats.standard_error + 1e-12);
}

TEST_CASE("K3 with three copies of V has expectation one") {
    const auto k3 = make_complete(3);
    const CoverFamily tripled =
        family_of(k3, PsiKind::maxdeg_plus_1, Rational(1, 2), {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
    const RoundingDistribution dist = rounding_distribution(k3, tripled);
    CHECK(exact_bad_edge_expectation(k3, dist) == Rational(1));
    const RoundingOutcome outcome = derandomize(k3, tripled);
    CHECK(outcome.bad_edges <= 1);
}

TEST_CASE("derandomization stays at or below the expectation floor") {
    const auto k2 = make_complete(2);
    const CoverFamily twice = family_of(k2, PsiKind::maxdeg_plus_1, Rational(1, 2), {{0, 1}, {0, 1}});
    const RoundingOutcome k2out = derandomize(k2, twice);
    CHECK(k2out.bad_edges == 0); // expectation 1/2 floors to 0

    const auto g = make_erdos_renyi(7, 0.5, 41);
    const CoverFamily classes = color_class_family(g);
    CHECK(derandomize(g, classes).bad_edges == 0);

    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto h = make_erdos_renyi(6, 0.5, seed + 60);
        for (const auto& [psi, alpha] :
             std::vector<std::pair<PsiKind, Rational>>{{PsiKind::degeneracy_plus_1, Rational(1)},
                                                       {PsiKind::maxdeg_plus_1, Rational(1, 2)}}) {
            const auto res = covering_number_exact(h, psi, alpha);
            const RoundingDistribution dist = rounding_distribution(h, res.family);
            const Rational expectation = exact_bad_edge_expectation(h, dist);
            const RoundingOutcome outcome = derandomize(h, res.family);
            CHECK(outcome.bad_edges <= expectation.floor());
            // Per-subset budgets imply the alpha * n ceiling on the
            // cover-based expectation.
            const auto cover_exp = cover_based_expectation(h, res.family, dist);
            REQUIRE(cover_exp.has_value());
            CHECK(*cover_exp <= alpha * Rational(h.vertex_count()));
            CHECK(expectation <= *cover_exp);
        }
    }
}

TEST_CASE("outcomes map to simplex configurations with the proof quotient") {
    // A 0-bad-edge outcome on a d-regular graph evaluates to -d/(k-1).
    const auto c5 = make_cycle(5);
    const ChromaticResult chi = chromatic_number(c5);
    RoundingOutcome outcome;
    outcome.choice = chi.witness.color;
    outcome.bad_edges = 0;
    const GramConfiguration cfg = outcome_to_gram(outcome, 3);
    CHECK(gram_quotient(c5, cfg) == doctest::Approx(-2.0 / 2.0).epsilon(1e-9));

    // Both endpoints on the same frame vector: quotient 1 on K2.
    RoundingOutcome same;
    same.choice = {0, 0};
    same.bad_edges = 1;
    CHECK(gram_quotient(make_complete(2), outcome_to_gram(same, 2)) == doctest::Approx(1.0));

    // Any outcome stays above lambda_n.
    const auto g = make_erdos_renyi(6, 0.6, 15);
    const auto res = covering_number_exact(g, PsiKind::maxdeg_plus_1, Rational(1, 2));
    const RoundingOutcome der = derandomize(g, res.family);
    if (res.k >= 2) {
        const double q = gram_quotient(g, outcome_to_gram(der, res.k));
        CHECK(q >= extreme_eigenpairs(g).lambda_n - 1e-9);
    }
}
