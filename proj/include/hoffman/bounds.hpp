#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hoffman/errors.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/rng.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman {

// Spectral lower bound 1 - lambda_1/lambda_n on the chromatic and vector
// chromatic numbers. Edgeless graphs: every parameter it bounds equals 1,
// so the bound is defined as 1. For weightings whose least eigenvalue is
// not negative the ratio stops being a bound and we refuse to guess.
inline double hoffman_bound(const WeightedGraph& g) {
    if (g.edge_count() == 0) return 1.0;
    const Spectrum s = extreme_eigenpairs(g);
    if (s.lambda_n >= 0.0)
        throw Error("bound undefined: least eigenvalue is " + std::to_string(s.lambda_n) +
                    " >= 0 for a nonzero weighting");
    return 1.0 - s.lambda_1 / s.lambda_n;
}

// Lower bound (d - lambda_n) / (2 alpha - lambda_n) on the alpha-budget
// covering number, d the average degree.
inline double covering_bound(const WeightedGraph& g, double alpha) {
    if (alpha < 0.0) throw Error("alpha must be >= 0");
    if (g.edge_count() == 0) return 1.0;
    const Spectrum s = extreme_eigenpairs(g);
    if (s.lambda_n >= 0.0)
        throw Error("bound undefined: least eigenvalue is not negative");
    const double d = stats(g).avg_degree;
    return (d - s.lambda_n) / (2.0 * alpha - s.lambda_n);
}

// Lower bound (lambda_1 - lambda_n) / (lambda - lambda_n) on the number of
// clusters whose induced subgraphs all have top eigenvalue <= lambda.
inline double clustering_bound(const WeightedGraph& g, double lambda) {
    if (g.edge_count() == 0) {
        if (lambda <= 0.0)
            throw Error("bound undefined: lambda <= least eigenvalue (0 for an edgeless graph)");
        return 1.0;
    }
    const Spectrum s = extreme_eigenpairs(g);
    if (lambda <= s.lambda_n) {
        std::string msg = "bound undefined: lambda " + std::to_string(lambda) +
                          " <= least eigenvalue " + std::to_string(s.lambda_n);
        if (lambda < 0.0)
            msg += "; note: no clustering exists for lambda < 0 (single vertices have top eigenvalue 0)";
        throw Error(msg);
    }
    return (s.lambda_1 - s.lambda_n) / (lambda - s.lambda_n);
}

struct WeightSearchResult {
    WeightedGraph weights;   // symmetric, supported on the edges, max |w| = 1
    double value = 0.0;      // 1 - lambda_1/lambda_n for that weighting
};

namespace detail {

inline double weighting_score(const WeightedGraph& g, const std::vector<double>& w) {
    const WeightedGraph cand =
        WeightedGraph::weighted(g.vertex_count(), g.edges(), w);
    const Spectrum s = extreme_eigenpairs(cand);
    if (s.lambda_n >= -1e-12) return -1e300; // ratio no longer a valid bound
    return 1.0 - s.lambda_1 / s.lambda_n;
}

inline void normalize_max_abs(std::vector<double>& w) {
    double mx = 0.0;
    for (const double x : w) mx = std::max(mx, std::abs(x));
    if (mx > 0.0)
        for (double& x : w) x /= mx;
}

} // namespace detail

// Derivative-free search for an edge weighting that strengthens the
// spectral bound: random-restart coordinate descent over edges with
// multiplicative moves {x2, x1/2, negate}, accepting improvements only.
// The input weighting is the first start, so the result never falls below
// the plain bound. The ratio is scale invariant; weights are renormalized
// to max |w| = 1 purely to keep the numbers readable.
inline WeightSearchResult improve_weight_bound(const WeightedGraph& g, int iterations,
                                               std::uint64_t seed) {
    if (g.edge_count() == 0) throw Error("weight search needs at least one edge");
    const int m = g.edge_count();
    std::vector<double> base(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) base[static_cast<std::size_t>(e)] = g.weight(e);
    detail::normalize_max_abs(base);

    std::vector<double> best_w = base;
    double best_value = detail::weighting_score(g, base);

    constexpr int kRestarts = 3;
    for (int restart = 0; restart < kRestarts; ++restart) {
        Rng rng(derive_stream(seed, static_cast<std::uint64_t>(restart), 0x77ULL));
        std::vector<double> w = base;
        if (restart > 0) {
            for (double& x : w) {
                x *= rng.uniform(0.5, 2.0);
                if (rng.uniform() < 0.2) x = -x;
            }
            detail::normalize_max_abs(w);
        }
        double value = detail::weighting_score(g, w);
        for (int iter = 0; iter < iterations; ++iter) {
            bool improved = false;
            for (int e = 0; e < m; ++e) {
                const double saved = w[static_cast<std::size_t>(e)];
                for (const double cand : {saved * 2.0, saved * 0.5, -saved}) {
                    w[static_cast<std::size_t>(e)] = cand;
                    std::vector<double> scaled = w;
                    detail::normalize_max_abs(scaled);
                    const double trial = detail::weighting_score(g, scaled);
                    if (trial > value + 1e-12) {
                        value = trial;
                        w = scaled;
                        improved = true;
                        break;
                    }
                    w[static_cast<std::size_t>(e)] = saved;
                }
            }
            if (!improved) break;
        }
        if (value > best_value) {
            best_value = value;
            best_w = w;
        }
    }
    return {WeightedGraph::weighted(g.vertex_count(), g.edges(), best_w), best_value};
}

// One row of the bounds report for a graph.
struct BoundReport {
    std::string graph_id;
    int n = 0;
    long long m = 0;
    double avg_degree = 0.0;
    double lambda_1 = 0.0;
    double lambda_n = 0.0;
    bool edgeless = false;
    double hoffman = 1.0;
    std::optional<std::pair<double, double>> covering;    // (alpha, value)
    std::optional<std::pair<double, double>> clustering;  // (lambda, value)
    std::optional<std::pair<std::string, double>> weight_bound; // (digest, value)
};

} // namespace hoffman
