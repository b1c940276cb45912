#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hoffman/cover_family.hpp"
#include "hoffman/errors.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/rational.hpp"
#include "hoffman/rng.hpp"
#include "hoffman/simplex.hpp"

namespace hoffman {

// Per-vertex choice probabilities p_{v,j} = h_v^{-1} / psi(S_j) over the
// subsets containing v. Exact rationals; rows sum to 1 by construction.
struct RoundingDistribution {
    // choices[v]: (subset index, probability), subset indices ascending.
    std::vector<std::vector<std::pair<int, Rational>>> choices;
};

inline RoundingDistribution rounding_distribution(const WeightedGraph& g, const CoverFamily& family) {
    const int n = g.vertex_count();
    if (family.psi_values.size() != family.subsets.size())
        throw Error("family is missing psi values; run verification first");
    for (const auto& subset : family.subsets) {
        const std::string problem = detail::subset_problem(n, subset);
        if (!problem.empty()) throw Error("bad subset in family: " + problem);
    }
    const auto mass = detail::family_masses(n, family.subsets, family.psi_values);
    RoundingDistribution dist;
    dist.choices.assign(static_cast<std::size_t>(n), {});
    for (std::size_t j = 0; j < family.subsets.size(); ++j)
        for (const int v : family.subsets[j])
            dist.choices[static_cast<std::size_t>(v)].push_back(
                {static_cast<int>(j), Rational(1, family.psi_values[j])});
    for (int v = 0; v < n; ++v) {
        auto& row = dist.choices[static_cast<std::size_t>(v)];
        if (row.empty()) throw Error("vertex " + std::to_string(v) + " is in no subset");
        const Rational h = mass[static_cast<std::size_t>(v)];
        Rational total(0);
        for (auto& [j, p] : row) {
            p /= h;
            total += p;
            if (h >= Rational(1) && p > Rational(1, family.psi_values[static_cast<std::size_t>(j)]))
                throw Error("internal: probability exceeds 1/psi");
        }
        if (total != Rational(1)) throw Error("internal: probabilities do not normalize");
    }
    return dist;
}

// Exact expected number of bad edges (endpoints choosing the same subset):
// sum over edges and subsets of p_{u,j} p_{v,j}.
inline Rational exact_bad_edge_expectation(const WeightedGraph& g, const RoundingDistribution& dist) {
    Rational total(0);
    for (const auto& [u, v] : g.edges()) {
        const auto& ru = dist.choices[static_cast<std::size_t>(u)];
        const auto& rv = dist.choices[static_cast<std::size_t>(v)];
        std::size_t a = 0, b = 0;
        while (a < ru.size() && b < rv.size()) {
            if (ru[a].first < rv[b].first) ++a;
            else if (ru[a].first > rv[b].first) ++b;
            else {
                total += ru[a].second * rv[b].second;
                ++a;
                ++b;
            }
        }
    }
    return total;
}

// The cover-based upper estimate used in the probabilistic argument:
// sum_j sum_{i in S_j} sum_{i' : (i,i') in E_j^i} p_{i,j} p_{i',j}.
// Covers may overlap in principle, so this can exceed the exact
// expectation; with the partition-style witnesses produced here the two
// coincide. Requires attached covers.
inline std::optional<Rational> cover_based_expectation(const WeightedGraph& g,
                                                       const CoverFamily& family,
                                                       const RoundingDistribution& dist) {
    if (family.covers.size() != family.subsets.size()) return std::nullopt;
    auto probability = [&](int v, int j) {
        for (const auto& [idx, p] : dist.choices[static_cast<std::size_t>(v)])
            if (idx == j) return p;
        return Rational(0);
    };
    Rational total(0);
    for (std::size_t j = 0; j < family.subsets.size(); ++j) {
        const auto& subset = family.subsets[j];
        const WeightedGraph sub = g.induced(subset);
        if (sub.edge_count() == 0) continue;
        if (family.covers[j].owner.size() != static_cast<std::size_t>(sub.edge_count()))
            return std::nullopt;
        for (int e = 0; e < sub.edge_count(); ++e) {
            const auto& [a, b] = sub.edges()[static_cast<std::size_t>(e)];
            const int owner_local = family.covers[j].owner[static_cast<std::size_t>(e)];
            const int other_local = owner_local == a ? b : a;
            total += probability(subset[static_cast<std::size_t>(owner_local)], static_cast<int>(j)) *
                     probability(subset[static_cast<std::size_t>(other_local)], static_cast<int>(j));
        }
    }
    return total;
}

struct SimulationStats {
    long long trials = 0;
    double mean = 0.0;
    double standard_error = 0.0;
    std::map<int, long long> histogram;
    Rational expectation_exact;                  // edge sum
    std::optional<Rational> expectation_cover;   // overlap-tolerant cover sum
};

// Monte-Carlo simulation of the random subset assignment. Substreams are
// derived per (trial, vertex), so results are bit-reproducible and
// independent of evaluation order.
inline SimulationStats simulate(const WeightedGraph& g, const CoverFamily& family,
                                long long trials, std::uint64_t seed) {
    if (trials < 1) throw Error("need at least one trial");
    const RoundingDistribution dist = rounding_distribution(g, family);
    const int n = g.vertex_count();
    // Fixed double conversion of the cumulative probabilities.
    std::vector<std::vector<double>> cumulative(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        double acc = 0.0;
        for (const auto& [j, p] : dist.choices[static_cast<std::size_t>(v)]) {
            acc += p.to_double();
            cumulative[static_cast<std::size_t>(v)].push_back(acc);
        }
        cumulative[static_cast<std::size_t>(v)].back() = 1.0;
    }
    SimulationStats out;
    out.trials = trials;
    out.expectation_exact = exact_bad_edge_expectation(g, dist);
    out.expectation_cover = cover_based_expectation(g, family, dist);
    long long sum = 0, sum_sq = 0;
    std::vector<int> choice(static_cast<std::size_t>(n));
    for (long long t = 0; t < trials; ++t) {
        for (int v = 0; v < n; ++v) {
            Rng stream(derive_stream(seed, static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(v)));
            const double u = stream.uniform();
            const auto& cum = cumulative[static_cast<std::size_t>(v)];
            std::size_t pick = 0;
            while (pick + 1 < cum.size() && u >= cum[pick]) ++pick;
            choice[static_cast<std::size_t>(v)] = dist.choices[static_cast<std::size_t>(v)][pick].first;
        }
        int bad = 0;
        for (const auto& [u, v] : g.edges())
            if (choice[static_cast<std::size_t>(u)] == choice[static_cast<std::size_t>(v)]) ++bad;
        sum += bad;
        sum_sq += static_cast<long long>(bad) * bad;
        ++out.histogram[bad];
    }
    out.mean = static_cast<double>(sum) / static_cast<double>(trials);
    if (trials > 1) {
        const double variance =
            (static_cast<double>(sum_sq) - static_cast<double>(sum) * out.mean) /
            static_cast<double>(trials - 1);
        out.standard_error = std::sqrt(std::max(0.0, variance) / static_cast<double>(trials));
    }
    return out;
}

// A concrete assignment of vertices to subsets and its bad-edge count.
struct RoundingOutcome {
    std::vector<int> choice;
    long long bad_edges = 0;
};

// Method of conditional expectations: vertices are fixed in index order,
// each choosing the subset that minimizes the conditional expected
// bad-edge count, evaluated in exact rationals so ties never flip under
// roundoff. The result never exceeds floor(exact expectation).
inline RoundingOutcome derandomize(const WeightedGraph& g, const CoverFamily& family) {
    const RoundingDistribution dist = rounding_distribution(g, family);
    const int n = g.vertex_count();
    std::vector<int> choice(static_cast<std::size_t>(n), -1);
    auto probability = [&](int v, int j) {
        for (const auto& [idx, p] : dist.choices[static_cast<std::size_t>(v)])
            if (idx == j) return p;
        return Rational(0);
    };
    auto conditional_expectation = [&]() {
        Rational total(0);
        for (const auto& [u, v] : g.edges()) {
            const int cu = choice[static_cast<std::size_t>(u)], cv = choice[static_cast<std::size_t>(v)];
            if (cu >= 0 && cv >= 0) {
                if (cu == cv) total += Rational(1);
            } else if (cu >= 0) {
                total += probability(v, cu);
            } else if (cv >= 0) {
                total += probability(u, cv);
            } else {
                const auto& ru = dist.choices[static_cast<std::size_t>(u)];
                for (const auto& [j, p] : ru) total += p * probability(v, j);
            }
        }
        return total;
    };
    const Rational start = conditional_expectation();
    for (int v = 0; v < n; ++v) {
        Rational best;
        int best_j = -1;
        for (const auto& [j, p] : dist.choices[static_cast<std::size_t>(v)]) {
            (void)p;
            choice[static_cast<std::size_t>(v)] = j;
            const Rational value = conditional_expectation();
            if (best_j < 0 || value < best) {
                best = value;
                best_j = j;
            }
        }
        choice[static_cast<std::size_t>(v)] = best_j;
    }
    RoundingOutcome outcome;
    outcome.choice = choice;
    for (const auto& [u, v] : g.edges())
        if (choice[static_cast<std::size_t>(u)] == choice[static_cast<std::size_t>(v)]) ++outcome.bad_edges;
    if (outcome.bad_edges > start.floor())
        throw Error("internal: derandomization exceeded floor of the expectation");
    return outcome;
}

// Maps an outcome through the regular simplex frame on k vectors; the
// resulting configuration plugs into gram_quotient.
inline GramConfiguration outcome_to_gram(const RoundingOutcome& outcome, int k) {
    return configuration_from_choices(outcome.choice, k);
}

} // namespace hoffman
