#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hoffman/edge_cover.hpp"
#include "hoffman/errors.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/psi.hpp"
#include "hoffman/rational.hpp"

namespace hoffman {

// Whether a subset's edge-ownership budget is alpha * psi(G[S_i]) (the
// reading the probabilistic argument actually uses) or alpha * psi(G) (the
// literal one). Both are implemented; per_subset is the default.
enum class BudgetMode { per_subset, global };

inline std::string to_string(BudgetMode mode) {
    return mode == BudgetMode::per_subset ? "per_subset" : "global";
}

inline BudgetMode parse_budget_mode(const std::string& name) {
    if (name == "per_subset") return BudgetMode::per_subset;
    if (name == "global") return BudgetMode::global;
    throw ParseError("unknown budget mode '" + name + "'");
}

// Subsets S_1..S_k with their psi values, per-vertex masses
// h_v = sum_{j : v in S_j} 1/psi(S_j), and per-subset edge-cover
// witnesses (each indexed against the induced subgraph's edge list).
struct CoverFamily {
    PsiKind psi = PsiKind::maxdeg_plus_1;
    Rational alpha = Rational(0);
    BudgetMode mode = BudgetMode::per_subset;
    std::vector<std::vector<int>> subsets;
    std::vector<int> psi_values;
    std::vector<Rational> vertex_mass;
    std::vector<EdgeCover> covers; // may be empty if no witnesses are attached

    int size() const { return static_cast<int>(subsets.size()); }
};

struct FamilyCheck {
    bool pass = true;
    std::vector<std::string> violations;

    void fail(const std::string& why) {
        pass = false;
        violations.push_back(why);
    }
};

namespace detail {

// Subsets must be duplicate-free lists of valid vertices; masses and
// induced subgraphs are both wrong otherwise.
inline std::string subset_problem(int n, const std::vector<int>& subset) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    if (subset.empty()) return "is empty";
    for (const int v : subset) {
        if (v < 0 || v >= n) return "has out-of-range vertex " + std::to_string(v);
        if (seen[static_cast<std::size_t>(v)]) return "repeats vertex " + std::to_string(v);
        seen[static_cast<std::size_t>(v)] = true;
    }
    return "";
}

inline std::vector<Rational> family_masses(int n, const std::vector<std::vector<int>>& subsets,
                                           const std::vector<int>& psi_values) {
    std::vector<Rational> mass(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t j = 0; j < subsets.size(); ++j)
        for (const int v : subsets[j])
            mass[static_cast<std::size_t>(v)] += Rational(1, psi_values[j]);
    return mass;
}

inline long long budget_for(const Rational& alpha, int psi_subset, int psi_whole, BudgetMode mode) {
    const Rational limit = alpha * Rational(mode == BudgetMode::per_subset ? psi_subset : psi_whole);
    return limit.floor(); // integer loads, so floor is exact
}

} // namespace detail

// Recomputes psi values, masses and budgets from scratch and checks the
// covering conditions: h_v >= 1 for every vertex (exact rationals) and an
// alpha-budget edge cover for every subset. Attached witnesses are
// validated; subsets without witnesses are decided by max-flow.
inline FamilyCheck verify_cover_family(const WeightedGraph& g, const CoverFamily& family,
                                       PsiKind psi, const Rational& alpha,
                                       BudgetMode mode = BudgetMode::per_subset) {
    FamilyCheck check;
    const int n = g.vertex_count();
    const int psi_whole = psi_value(psi, g);
    std::vector<int> psi_values;
    for (std::size_t j = 0; j < family.subsets.size(); ++j) {
        const std::string problem = detail::subset_problem(n, family.subsets[j]);
        if (!problem.empty()) {
            check.fail("subset " + std::to_string(j) + " " + problem);
            continue;
        }
        psi_values.push_back(psi_value(psi, g, family.subsets[j]));
    }
    if (!check.pass) return check;

    const auto mass = detail::family_masses(n, family.subsets, psi_values);
    for (int v = 0; v < n; ++v)
        if (mass[static_cast<std::size_t>(v)] < Rational(1))
            check.fail("vertex " + std::to_string(v) + " has mass " +
                       mass[static_cast<std::size_t>(v)].str() + " < 1");

    for (std::size_t j = 0; j < family.subsets.size(); ++j) {
        const WeightedGraph sub = g.induced(family.subsets[j]);
        const long long budget =
            detail::budget_for(alpha, psi_values[j], psi_whole, mode);
        if (j < family.covers.size() && !family.covers[j].owner.empty()) {
            const EdgeCover& cover = family.covers[j];
            if (static_cast<int>(cover.owner.size()) != sub.edge_count()) {
                check.fail("subset " + std::to_string(j) + " cover does not match induced edges");
                continue;
            }
            std::vector<int> load(static_cast<std::size_t>(sub.vertex_count()), 0);
            for (int e = 0; e < sub.edge_count(); ++e) {
                const auto& [a, b] = sub.edges()[static_cast<std::size_t>(e)];
                const int owner = cover.owner[static_cast<std::size_t>(e)];
                if (owner != a && owner != b) {
                    check.fail("subset " + std::to_string(j) + " edge " + std::to_string(e) +
                               " owned by a non-endpoint");
                    continue;
                }
                ++load[static_cast<std::size_t>(owner)];
            }
            for (int v = 0; v < sub.vertex_count(); ++v)
                if (load[static_cast<std::size_t>(v)] > budget)
                    check.fail("subset " + std::to_string(j) + " vertex load " +
                               std::to_string(load[static_cast<std::size_t>(v)]) + " exceeds budget " +
                               std::to_string(budget));
        } else if (sub.edge_count() > 0) {
            if (budget * static_cast<long long>(sub.vertex_count()) < sub.edge_count() ||
                !find_edge_cover(sub, static_cast<int>(budget)).feasible)
                check.fail("subset " + std::to_string(j) + " admits no cover within budget " +
                           std::to_string(budget));
        }
    }
    return check;
}

// Relaxed variant: masses must equal 1 exactly, and each subset only needs
// |E(S_i)| <= alpha * psi(S_i) * |V(S_i)| instead of an edge cover.
inline FamilyCheck verify_relaxed_cover(const WeightedGraph& g, const CoverFamily& family,
                                        PsiKind psi, const Rational& alpha) {
    FamilyCheck check;
    const int n = g.vertex_count();
    std::vector<int> psi_values;
    for (std::size_t j = 0; j < family.subsets.size(); ++j) {
        const std::string problem = detail::subset_problem(n, family.subsets[j]);
        if (!problem.empty()) {
            check.fail("subset " + std::to_string(j) + " " + problem);
            return check;
        }
        psi_values.push_back(psi_value(psi, g, family.subsets[j]));
    }
    const auto mass = detail::family_masses(n, family.subsets, psi_values);
    for (int v = 0; v < n; ++v)
        if (mass[static_cast<std::size_t>(v)] != Rational(1))
            check.fail("vertex " + std::to_string(v) + " has mass " +
                       mass[static_cast<std::size_t>(v)].str() + " != 1");
    for (std::size_t j = 0; j < family.subsets.size(); ++j) {
        const WeightedGraph sub = g.induced(family.subsets[j]);
        const Rational limit = alpha * Rational(psi_values[j]) * Rational(sub.vertex_count());
        if (Rational(sub.edge_count()) > limit)
            check.fail("subset " + std::to_string(j) + " has " + std::to_string(sub.edge_count()) +
                       " edges > " + limit.str());
    }
    return check;
}

struct CoveringResult {
    int k = 0;
    CoverFamily family;
};

// Exact covering number: iterative deepening over the family size k, with
// candidate subsets prefiltered by the alpha budget and the search over
// (multi)sets of candidates pruned by the best possible remaining mass.
// Candidates are scanned in ascending bitmask order, so the returned
// witness is the lexicographically first feasible family of minimal size.
inline CoveringResult covering_number_exact(const WeightedGraph& g, PsiKind psi,
                                            const Rational& alpha, int k_max = -1,
                                            BudgetMode mode = BudgetMode::per_subset,
                                            bool allow_repeats = true, int max_n = 7) {
    const int n = g.vertex_count();
    if (n > max_n)
        throw CapExceeded("covering oracle capped at n <= " + std::to_string(max_n));
    if (n == 0) return {0, CoverFamily{psi, alpha, mode, {}, {}, {}, {}}};
    if (alpha < Rational(0)) throw Error("alpha must be >= 0");
    if (k_max <= 0) k_max = n; // singletons always give a feasible family of size n

    const int psi_whole = psi_value(psi, g);

    struct Candidate {
        std::uint32_t mask;
        std::vector<int> vertices;
        int psi;
        EdgeCover cover;
    };
    std::vector<Candidate> candidates;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> vertices;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) vertices.push_back(v);
        const WeightedGraph sub = g.induced(vertices);
        const int psi_subset = psi_value(psi, sub);
        const long long budget = detail::budget_for(alpha, psi_subset, psi_whole, mode);
        auto feasibility = find_edge_cover(sub, static_cast<int>(std::max(0LL, budget)));
        if (!feasibility.feasible) continue;
        candidates.push_back({mask, std::move(vertices), psi_subset, std::move(feasibility.cover)});
    }

    const int c = static_cast<int>(candidates.size());
    // suffix_gain[v][i]: the largest single-subset mass contribution for v
    // among candidates i.. (0 if none contains v). suffix_total[i]: the
    // largest total mass any one candidate i.. can add. Both prune
    // branches whose remaining slots cannot close the coverage gap.
    std::vector<std::vector<Rational>> suffix_gain(
        static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(c) + 1, Rational(0)));
    std::vector<Rational> suffix_total(static_cast<std::size_t>(c) + 1, Rational(0));
    for (int i = c - 1; i >= 0; --i) {
        Rational total(0);
        for (int v = 0; v < n; ++v) {
            Rational gain = suffix_gain[static_cast<std::size_t>(v)][static_cast<std::size_t>(i + 1)];
            if (candidates[static_cast<std::size_t>(i)].mask & (1u << v)) {
                const Rational own(1, candidates[static_cast<std::size_t>(i)].psi);
                if (own > gain) gain = own;
                total += own;
            }
            suffix_gain[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = gain;
        }
        suffix_total[static_cast<std::size_t>(i)] = suffix_total[static_cast<std::size_t>(i + 1)];
        if (total > suffix_total[static_cast<std::size_t>(i)])
            suffix_total[static_cast<std::size_t>(i)] = total;
    }

    std::vector<int> chosen;
    std::vector<Rational> mass(static_cast<std::size_t>(n), Rational(0));
    std::vector<int> solution;

    auto dfs = [&](auto&& self, int from, int slots) -> bool {
        if (slots == 0) {
            for (int v = 0; v < n; ++v)
                if (mass[static_cast<std::size_t>(v)] < Rational(1)) return false;
            solution = chosen;
            return true;
        }
        Rational deficit(0);
        for (int v = 0; v < n; ++v) {
            const Rational h = mass[static_cast<std::size_t>(v)];
            const Rational reachable =
                h + suffix_gain[static_cast<std::size_t>(v)][static_cast<std::size_t>(from)] *
                        Rational(slots);
            if (reachable < Rational(1)) return false;
            if (h < Rational(1)) deficit += Rational(1) - h;
        }
        if (deficit > suffix_total[static_cast<std::size_t>(from)] * Rational(slots)) return false;
        for (int i = from; i < c; ++i) {
            chosen.push_back(i);
            for (const int v : candidates[static_cast<std::size_t>(i)].vertices)
                mass[static_cast<std::size_t>(v)] += Rational(1, candidates[static_cast<std::size_t>(i)].psi);
            if (self(self, allow_repeats ? i : i + 1, slots - 1)) return true;
            for (const int v : candidates[static_cast<std::size_t>(i)].vertices)
                mass[static_cast<std::size_t>(v)] -= Rational(1, candidates[static_cast<std::size_t>(i)].psi);
            chosen.pop_back();
        }
        return false;
    };

    for (int k = 1; k <= k_max; ++k) {
        if (dfs(dfs, 0, k)) {
            CoverFamily family;
            family.psi = psi;
            family.alpha = alpha;
            family.mode = mode;
            for (const int i : solution) {
                family.subsets.push_back(candidates[static_cast<std::size_t>(i)].vertices);
                family.psi_values.push_back(candidates[static_cast<std::size_t>(i)].psi);
                family.covers.push_back(candidates[static_cast<std::size_t>(i)].cover);
            }
            family.vertex_mass = detail::family_masses(n, family.subsets, family.psi_values);
            return {k, family};
        }
    }
    throw Error("no covering family within k_max = " + std::to_string(k_max));
}

} // namespace hoffman
