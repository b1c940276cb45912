#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hoffman/errors.hpp"
#include "hoffman/rng.hpp"

namespace hoffman {

// Simple undirected graph with optional symmetric real edge weights.
// Vertices are 0-based contiguous integers. Edges are kept sorted with
// i < j; the weight array, when present, is parallel to the edge list, so
// weight support is structurally identical to the edge set. Instances are
// immutable after construction and safe to share across threads.
class WeightedGraph {
  public:
    using Edge = std::pair<int, int>;

    WeightedGraph() = default;

    static WeightedGraph simple(int n, std::vector<Edge> edges) {
        return WeightedGraph(n, std::move(edges), {});
    }

    static WeightedGraph weighted(int n, std::vector<Edge> edges, std::vector<double> weights) {
        if (edges.size() != weights.size())
            throw Error("weight list does not match edge list");
        return WeightedGraph(n, std::move(edges), std::move(weights));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool is_weighted() const { return !weights_.empty(); }

    double weight(int edge_index) const {
        return weights_.empty() ? 1.0 : weights_[static_cast<std::size_t>(edge_index)];
    }

    bool unit_weights() const {
        for (const double w : weights_)
            if (w != 1.0) return false;
        return true;
    }

    // Neighbors of v as (vertex, edge index) pairs, sorted by vertex.
    const std::vector<std::pair<int, int>>& neighbors(int v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    // Index into edges() or -1.
    int edge_index(int u, int v) const {
        if (u == v) return -1;
        if (u > v) std::swap(u, v);
        const auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v}) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    // Induced subgraph on the given vertices, relabeled 0..k-1 in the order
    // given (callers pass sorted lists for canonical results).
    WeightedGraph induced(const std::vector<int>& vertices) const {
        std::vector<int> position(static_cast<std::size_t>(n_), -1);
        for (std::size_t i = 0; i < vertices.size(); ++i)
            position[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
        std::vector<Edge> edges;
        std::vector<double> weights;
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            const int a = position[static_cast<std::size_t>(edges_[e].first)];
            const int b = position[static_cast<std::size_t>(edges_[e].second)];
            if (a < 0 || b < 0) continue;
            edges.emplace_back(std::min(a, b), std::max(a, b));
            if (!weights_.empty()) weights.push_back(weights_[e]);
        }
        return WeightedGraph(static_cast<int>(vertices.size()), std::move(edges), std::move(weights));
    }

    WeightedGraph induced_mask(std::uint32_t mask) const {
        std::vector<int> vertices;
        for (int v = 0; v < n_; ++v)
            if (mask & (1u << v)) vertices.push_back(v);
        return induced(vertices);
    }

    // Same graph with vertex i renamed perm[i].
    WeightedGraph relabeled(const std::vector<int>& perm) const {
        std::vector<Edge> edges;
        edges.reserve(edges_.size());
        std::vector<std::pair<Edge, double>> tagged;
        tagged.reserve(edges_.size());
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            int a = perm[static_cast<std::size_t>(edges_[e].first)];
            int b = perm[static_cast<std::size_t>(edges_[e].second)];
            if (a > b) std::swap(a, b);
            tagged.push_back({{a, b}, weight(static_cast<int>(e))});
        }
        std::sort(tagged.begin(), tagged.end());
        std::vector<double> weights;
        for (const auto& [edge, w] : tagged) {
            edges.push_back(edge);
            if (!weights_.empty()) weights.push_back(w);
        }
        return WeightedGraph(n_, std::move(edges), std::move(weights));
    }

    bool operator==(const WeightedGraph& o) const {
        return n_ == o.n_ && edges_ == o.edges_ && weights_ == o.weights_;
    }

  private:
    WeightedGraph(int n, std::vector<Edge> edges, std::vector<double> weights)
        : n_(n), edges_(std::move(edges)), weights_(std::move(weights)) {
        if (n_ < 0) throw Error("negative vertex count");
        for (auto& [u, v] : edges_) {
            if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n_) throw Error("edge endpoint out of range");
        }
        // Sort edges and the weight array together.
        if (!weights_.empty()) {
            std::vector<std::size_t> order(edges_.size());
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return edges_[a] < edges_[b]; });
            std::vector<Edge> se(edges_.size());
            std::vector<double> sw(edges_.size());
            for (std::size_t i = 0; i < order.size(); ++i) {
                se[i] = edges_[order[i]];
                sw[i] = weights_[order[i]];
            }
            edges_ = std::move(se);
            weights_ = std::move(sw);
        } else {
            std::sort(edges_.begin(), edges_.end());
        }
        for (std::size_t e = 1; e < edges_.size(); ++e)
            if (edges_[e] == edges_[e - 1])
                throw Error("duplicate edge (" + std::to_string(edges_[e].first) + "," +
                            std::to_string(edges_[e].second) + ")");
        adjacency_.assign(static_cast<std::size_t>(n_), {});
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            adjacency_[static_cast<std::size_t>(edges_[e].first)].push_back(
                {edges_[e].second, static_cast<int>(e)});
            adjacency_[static_cast<std::size_t>(edges_[e].second)].push_back(
                {edges_[e].first, static_cast<int>(e)});
        }
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<double> weights_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

struct GraphStats {
    int n = 0;
    long long m = 0;
    double avg_degree = 0.0; // 2m/n
    int max_degree = 0;
    int degeneracy = 0;
    std::vector<int> peel_order; // repeated minimum-degree removal sequence
};

// Basic statistics. Degeneracy comes from repeated minimum-degree peeling;
// the removal order is exposed because the degeneracy edge-cover
// construction reuses it.
inline GraphStats stats(const WeightedGraph& g) {
    GraphStats s;
    s.n = g.vertex_count();
    s.m = g.edge_count();
    s.avg_degree = s.n == 0 ? 0.0 : 2.0 * static_cast<double>(s.m) / s.n;
    std::vector<int> deg(static_cast<std::size_t>(s.n));
    for (int v = 0; v < s.n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        s.max_degree = std::max(s.max_degree, deg[static_cast<std::size_t>(v)]);
    }
    std::vector<bool> removed(static_cast<std::size_t>(s.n), false);
    s.peel_order.reserve(static_cast<std::size_t>(s.n));
    for (int step = 0; step < s.n; ++step) {
        int best = -1;
        for (int v = 0; v < s.n; ++v)
            if (!removed[static_cast<std::size_t>(v)] &&
                (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]))
                best = v;
        s.degeneracy = std::max(s.degeneracy, deg[static_cast<std::size_t>(best)]);
        removed[static_cast<std::size_t>(best)] = true;
        s.peel_order.push_back(best);
        for (const auto& [u, e] : g.neighbors(best))
            if (!removed[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
    }
    return s;
}

inline WeightedGraph make_complete(int n) {
    std::vector<WeightedGraph::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return WeightedGraph::simple(n, std::move(edges));
}

inline WeightedGraph make_cycle(int n) {
    if (n < 3) throw Error("cycle needs at least 3 vertices");
    std::vector<WeightedGraph::Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return WeightedGraph::simple(n, std::move(edges));
}

inline WeightedGraph make_complete_bipartite(int a, int b) {
    std::vector<WeightedGraph::Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return WeightedGraph::simple(a + b, std::move(edges));
}

// Petersen graph built as the Kneser graph on 2-element subsets of a
// 5-element set, adjacent when disjoint.
inline WeightedGraph make_petersen() {
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
    std::vector<WeightedGraph::Edge> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            const auto [a, b] = subsets[i];
            const auto [c, d] = subsets[j];
            if (a != c && a != d && b != c && b != d)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return WeightedGraph::simple(10, std::move(edges));
}

inline WeightedGraph make_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw Error("bad Erdos-Renyi parameters");
    Rng rng(derive_stream(seed, 0x6572ULL)); // tag keeps streams disjoint per family
    std::vector<WeightedGraph::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < p) edges.emplace_back(i, j);
    return WeightedGraph::simple(n, std::move(edges));
}

// Random d-regular simple graph from the configuration/pairing model.
// Within one attempt, stubs are shuffled and greedily paired; pairs that
// would form a loop or duplicate edge go back into the pool. An attempt
// that stops making progress is rejected wholesale. 1000 attempts, then
// an error that reports the retry count.
inline WeightedGraph make_random_regular(int n, int d, std::uint64_t seed) {
    if (d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
        throw Error("infeasible degree sequence: n=" + std::to_string(n) + " d=" + std::to_string(d));
    if (d == 0) return WeightedGraph::simple(n, {});
    Rng rng(derive_stream(seed, 0x7265ULL));
    constexpr int kMaxAttempts = 1000;
    for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < d; ++k) stubs.push_back(v);
        std::vector<std::vector<bool>> present(static_cast<std::size_t>(n),
                                               std::vector<bool>(static_cast<std::size_t>(n), false));
        std::vector<WeightedGraph::Edge> edges;
        bool dead_end = false;
        while (!stubs.empty()) {
            rng.shuffle(stubs);
            std::vector<int> rest;
            bool progress = false;
            for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
                const int u = stubs[i], v = stubs[i + 1];
                if (u == v || present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                    rest.push_back(u);
                    rest.push_back(v);
                } else {
                    present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
                    present[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
                    edges.emplace_back(std::min(u, v), std::max(u, v));
                    progress = true;
                }
            }
            if (!progress) {
                dead_end = true;
                break;
            }
            stubs = std::move(rest);
        }
        if (!dead_end) return WeightedGraph::simple(n, std::move(edges));
    }
    throw Error("pairing-model rejection cap exceeded after " + std::to_string(kMaxAttempts) +
                " attempts (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
}

// All simple graphs on exactly n vertices, one representative per
// isomorphism class (the representative whose edge bitmask is minimal over
// all vertex permutations). Brute force; capped at n <= 6.
inline std::vector<WeightedGraph> enumerate_graphs(int n) {
    if (n < 1 || n > 6) throw CapExceeded("graph enumeration capped at 1 <= n <= 6");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int bits = static_cast<int>(pairs.size());
    std::vector<int> pair_index(static_cast<std::size_t>(n * n), -1);
    for (int k = 0; k < bits; ++k)
        pair_index[static_cast<std::size_t>(pairs[static_cast<std::size_t>(k)].first * n +
                                            pairs[static_cast<std::size_t>(k)].second)] = k;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<WeightedGraph> result;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        bool canonical = true;
        for (const auto& p : perms) {
            std::uint32_t image = 0;
            for (int k = 0; k < bits; ++k) {
                if (!(mask & (1u << k))) continue;
                int a = p[static_cast<std::size_t>(pairs[static_cast<std::size_t>(k)].first)];
                int b = p[static_cast<std::size_t>(pairs[static_cast<std::size_t>(k)].second)];
                if (a > b) std::swap(a, b);
                image |= 1u << pair_index[static_cast<std::size_t>(a * n + b)];
            }
            if (image < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        std::vector<WeightedGraph::Edge> edges;
        for (int k = 0; k < bits; ++k)
            if (mask & (1u << k)) edges.push_back(pairs[static_cast<std::size_t>(k)]);
        result.push_back(WeightedGraph::simple(n, std::move(edges)));
    }
    return result;
}

} // namespace hoffman
