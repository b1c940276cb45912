#pragma once

#include <algorithm>
#include <vector>

#include "hoffman/errors.hpp"
#include "hoffman/graph.hpp"

namespace hoffman {

struct Coloring {
    int k = 0;                // number of colors used
    std::vector<int> color;   // vertex -> 0..k-1
};

inline bool is_proper(const WeightedGraph& g, const std::vector<int>& color) {
    if (static_cast<int>(color.size()) != g.vertex_count()) return false;
    for (const auto& [u, v] : g.edges())
        if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) return false;
    return true;
}

struct ChromaticResult {
    int chromatic_number = 0;
    Coloring witness;
};

namespace detail {

// Greedy clique by descending degree, then local extension attempts.
inline std::vector<int> greedy_clique(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<int> best;
    for (int start = 0; start < std::min(n, 8); ++start) {
        std::vector<int> clique{order[static_cast<std::size_t>(start)]};
        for (const int v : order) {
            bool ok = true;
            for (const int c : clique)
                if (c == v || !g.has_edge(c, v)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        if (clique.size() > best.size()) best = clique;
    }
    return best;
}

struct DsaturState {
    const WeightedGraph* g;
    int n;
    int best_k;                        // current upper bound
    std::vector<int> best_color;
    std::vector<int> color;            // -1 = unassigned
    std::vector<std::vector<int>> neighbor_color_count;
    std::vector<int> saturation;
    int assigned = 0;

    // Maximum saturation first, then maximum degree, lowest index last.
    int select() const {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] >= 0) continue;
            if (pick < 0) {
                pick = v;
                continue;
            }
            const int sv = saturation[static_cast<std::size_t>(v)], sp = saturation[static_cast<std::size_t>(pick)];
            if (sv > sp || (sv == sp && g->degree(v) > g->degree(pick)))
                pick = v;
        }
        return pick;
    }

    void assign(int v, int c) {
        color[static_cast<std::size_t>(v)] = c;
        ++assigned;
        for (const auto& [u, e] : g->neighbors(v)) {
            (void)e;
            if (color[static_cast<std::size_t>(u)] >= 0) continue;
            if (neighbor_color_count[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)]++ == 0)
                ++saturation[static_cast<std::size_t>(u)];
        }
    }

    void unassign(int v, int c) {
        color[static_cast<std::size_t>(v)] = -1;
        --assigned;
        for (const auto& [u, e] : g->neighbors(v)) {
            (void)e;
            if (color[static_cast<std::size_t>(u)] >= 0) continue;
            if (--neighbor_color_count[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] == 0)
                --saturation[static_cast<std::size_t>(u)];
        }
    }

    void search(int used) {
        if (used >= best_k) return; // cannot improve
        if (assigned == n) {
            best_k = used;
            best_color = color;
            return;
        }
        const int v = select();
        const int limit = std::min(used + 1, best_k - 1);
        for (int c = 0; c < limit; ++c) {
            if (neighbor_color_count[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] > 0) continue;
            assign(v, c);
            search(std::max(used, c + 1));
            unassign(v, c);
            if (best_k <= lower_bound) return;
        }
    }

    int lower_bound = 1;
};

} // namespace detail

// Greedy DSATUR coloring; used as the initial upper bound and available as
// a cheap standalone heuristic.
inline Coloring dsatur_greedy(const WeightedGraph& g) {
    const int n = g.vertex_count();
    detail::DsaturState st;
    st.g = &g;
    st.n = n;
    st.best_k = n + 1;
    st.color.assign(static_cast<std::size_t>(n), -1);
    st.neighbor_color_count.assign(static_cast<std::size_t>(n),
                                   std::vector<int>(static_cast<std::size_t>(n + 1), 0));
    st.saturation.assign(static_cast<std::size_t>(n), 0);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        const int v = st.select();
        int c = 0;
        while (st.neighbor_color_count[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] > 0) ++c;
        st.assign(v, c);
        used = std::max(used, c + 1);
    }
    return Coloring{used, st.color};
}

// Exact chromatic number: DSATUR-guided branch and bound with a greedy
// clique lower bound and the greedy coloring as initial incumbent. The
// witness is re-checked before returning.
inline ChromaticResult chromatic_number(const WeightedGraph& g, int max_n = 40) {
    const int n = g.vertex_count();
    if (n > max_n)
        throw CapExceeded("chromatic oracle capped at n <= " + std::to_string(max_n));
    if (n == 0) return {0, Coloring{0, {}}};
    if (g.edge_count() == 0)
        return {1, Coloring{1, std::vector<int>(static_cast<std::size_t>(n), 0)}};

    const Coloring greedy = dsatur_greedy(g);
    const std::vector<int> clique = detail::greedy_clique(g);

    detail::DsaturState st;
    st.g = &g;
    st.n = n;
    st.best_k = greedy.k;
    st.best_color = greedy.color;
    st.color.assign(static_cast<std::size_t>(n), -1);
    st.neighbor_color_count.assign(static_cast<std::size_t>(n),
                                   std::vector<int>(static_cast<std::size_t>(n + 1), 0));
    st.saturation.assign(static_cast<std::size_t>(n), 0);
    st.lower_bound = static_cast<int>(clique.size());
    // Pre-color the clique: a valid symmetry break.
    for (std::size_t i = 0; i < clique.size(); ++i)
        st.assign(clique[i], static_cast<int>(i));
    if (st.best_k > st.lower_bound) st.search(static_cast<int>(clique.size()));

    Coloring witness{st.best_k, st.best_color};
    if (!is_proper(g, witness.color))
        throw Error("internal: chromatic witness failed verification");
    int used = 0;
    for (const int c : witness.color) used = std::max(used, c + 1);
    witness.k = used;
    return {witness.k, witness};
}

} // namespace hoffman
