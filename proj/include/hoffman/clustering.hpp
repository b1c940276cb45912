#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hoffman/errors.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman {

// A vertex partition together with the top adjacency eigenvalue of every
// part's induced weighted subgraph.
struct Clustering {
    int k = 0;
    std::vector<int> assignment;               // vertex -> cluster index
    std::vector<std::vector<int>> clusters;
    std::vector<double> cluster_lambda_1;
};

struct ClusteringResult {
    bool feasible = false;
    int k = 0;
    Clustering witness;
};

namespace detail {

class SubsetTopEigenvalue {
  public:
    explicit SubsetTopEigenvalue(const WeightedGraph& g) : g_(g) {}

    double operator()(std::uint32_t mask) {
        const auto it = cache_.find(mask);
        if (it != cache_.end()) return it->second;
        double value = 0.0;
        const WeightedGraph sub = g_.induced_mask(mask);
        if (sub.edge_count() > 0) value = extreme_eigenpairs(sub).lambda_1;
        cache_.emplace(mask, value);
        return value;
    }

  private:
    const WeightedGraph& g_;
    std::unordered_map<std::uint32_t, double> cache_;
};

} // namespace detail

// Exact minimal number of clusters whose induced subgraphs all have top
// eigenvalue <= lambda. Partitions are enumerated as restricted growth
// strings in lexicographic order with per-cluster eigenvalue checks
// memoized over vertex bitmasks; the first partition realizing the final
// minimum is returned, which makes witnesses reproducible.
inline ClusteringResult clustering_number_exact(const WeightedGraph& g, double lambda,
                                                int max_n = 11) {
    const int n = g.vertex_count();
    if (n > max_n)
        throw CapExceeded("clustering oracle capped at n <= " + std::to_string(max_n));
    ClusteringResult result;
    if (lambda < 0.0) return result; // single vertices already have lambda_1 = 0
    if (n == 0) {
        result.feasible = true;
        result.k = 0;
        return result;
    }
    constexpr double kFeasTol = 1e-9;
    detail::SubsetTopEigenvalue top(g);

    std::vector<int> assignment(static_cast<std::size_t>(n), -1);
    std::vector<std::uint32_t> cluster_mask(static_cast<std::size_t>(n), 0);
    int best_k = n + 1;
    std::vector<int> best_assignment;

    auto rec = [&](auto&& self, int vertex, int blocks) -> void {
        if (blocks >= best_k) return;
        if (vertex == n) {
            best_k = blocks;
            best_assignment = assignment;
            return;
        }
        const int limit = std::min(blocks, best_k - 1);
        for (int c = 0; c <= limit && c < n; ++c) {
            const std::uint32_t extended = cluster_mask[static_cast<std::size_t>(c)] |
                                           (1u << vertex);
            if (top(extended) > lambda + kFeasTol) continue;
            assignment[static_cast<std::size_t>(vertex)] = c;
            const std::uint32_t saved = cluster_mask[static_cast<std::size_t>(c)];
            cluster_mask[static_cast<std::size_t>(c)] = extended;
            self(self, vertex + 1, std::max(blocks, c + 1));
            cluster_mask[static_cast<std::size_t>(c)] = saved;
            assignment[static_cast<std::size_t>(vertex)] = -1;
        }
    };
    rec(rec, 0, 0);

    if (best_k > n) return result; // infeasible for this lambda
    result.feasible = true;
    result.k = best_k;
    result.witness.k = best_k;
    result.witness.assignment = best_assignment;
    result.witness.clusters.assign(static_cast<std::size_t>(best_k), {});
    for (int v = 0; v < n; ++v)
        result.witness.clusters[static_cast<std::size_t>(best_assignment[static_cast<std::size_t>(v)])]
            .push_back(v);
    for (const auto& cluster : result.witness.clusters) {
        const WeightedGraph sub = g.induced(cluster);
        result.witness.cluster_lambda_1.push_back(
            sub.edge_count() == 0 ? 0.0 : extreme_eigenpairs(sub).lambda_1);
    }
    return result;
}

} // namespace hoffman
