#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "hoffman/errors.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/psi.hpp"

namespace hoffman {

// An assignment of every edge to one of its endpoints; max_load is the
// largest number of edges any vertex owns. Realizes the covers
// E = union_i E_i with E_i incident to i and |E_i| <= c.
struct EdgeCover {
    std::vector<int> owner; // owner[e] in {edges()[e].first, edges()[e].second}
    int max_load = 0;
};

// Certificate of infeasibility: an induced subgraph with more than
// budget * |vertices| edges.
struct DenseWitness {
    std::vector<int> vertices;
    std::vector<int> edge_indices;
};

struct EdgeCoverResult {
    bool feasible = false;
    EdgeCover cover;
    DenseWitness witness;
};

namespace detail {

// Dinic max-flow on small integer networks.
class Dinic {
  public:
    explicit Dinic(int nodes) : head_(static_cast<std::size_t>(nodes), -1), level_(static_cast<std::size_t>(nodes)), it_(static_cast<std::size_t>(nodes)) {}

    int add_edge(int from, int to, int cap) {
        const int id = static_cast<int>(to_.size());
        to_.push_back(to);
        cap_.push_back(cap);
        next_.push_back(head_[static_cast<std::size_t>(from)]);
        head_[static_cast<std::size_t>(from)] = id;
        to_.push_back(from);
        cap_.push_back(0);
        next_.push_back(head_[static_cast<std::size_t>(to)]);
        head_[static_cast<std::size_t>(to)] = id + 1;
        return id;
    }

    int flow_through(int edge_id) const { return cap_[static_cast<std::size_t>(edge_id) + 1]; }

    long long max_flow(int s, int t) {
        long long total = 0;
        while (bfs(s, t)) {
            it_ = head_;
            long long f;
            while ((f = dfs(s, t, 1LL << 60)) > 0) total += f;
        }
        return total;
    }

    // Nodes reachable from s in the residual network (after max_flow).
    std::vector<bool> reachable(int s) const {
        std::vector<bool> seen(head_.size(), false);
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = true;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int e = head_[static_cast<std::size_t>(u)]; e >= 0; e = next_[static_cast<std::size_t>(e)])
                if (cap_[static_cast<std::size_t>(e)] > 0 && !seen[static_cast<std::size_t>(to_[static_cast<std::size_t>(e)])]) {
                    seen[static_cast<std::size_t>(to_[static_cast<std::size_t>(e)])] = true;
                    q.push(to_[static_cast<std::size_t>(e)]);
                }
        }
        return seen;
    }

  private:
    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        q.push(s);
        level_[static_cast<std::size_t>(s)] = 0;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int e = head_[static_cast<std::size_t>(u)]; e >= 0; e = next_[static_cast<std::size_t>(e)]) {
                const int v = to_[static_cast<std::size_t>(e)];
                if (cap_[static_cast<std::size_t>(e)] > 0 && level_[static_cast<std::size_t>(v)] < 0) {
                    level_[static_cast<std::size_t>(v)] = level_[static_cast<std::size_t>(u)] + 1;
                    q.push(v);
                }
            }
        }
        return level_[static_cast<std::size_t>(t)] >= 0;
    }

    long long dfs(int u, int t, long long limit) {
        if (u == t) return limit;
        for (int& e = it_[static_cast<std::size_t>(u)]; e >= 0; e = next_[static_cast<std::size_t>(e)]) {
            const int v = to_[static_cast<std::size_t>(e)];
            if (cap_[static_cast<std::size_t>(e)] <= 0 || level_[static_cast<std::size_t>(v)] != level_[static_cast<std::size_t>(u)] + 1)
                continue;
            const long long f = dfs(v, t, std::min(limit, static_cast<long long>(cap_[static_cast<std::size_t>(e)])));
            if (f > 0) {
                cap_[static_cast<std::size_t>(e)] -= static_cast<int>(f);
                cap_[static_cast<std::size_t>(e ^ 1)] += static_cast<int>(f);
                return f;
            }
        }
        return 0;
    }

    std::vector<int> to_, cap_, next_;
    std::vector<int> head_, level_, it_;
};

} // namespace detail

// Decides exactly whether every edge can be assigned to an endpoint with
// per-vertex load at most budget, via max-flow on the network
// source -> edge nodes (cap 1) -> endpoint nodes (cap 1) -> sink (cap budget).
// On infeasibility the residual cut yields a subgraph H with
// |E(H)| > budget * |V(H)|.
inline EdgeCoverResult find_edge_cover(const WeightedGraph& g, int budget) {
    if (budget < 0) throw Error("edge cover budget must be >= 0");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    EdgeCoverResult result;
    if (m == 0) {
        result.feasible = true;
        result.cover.max_load = 0;
        return result;
    }
    const int source = 0, sink = 1 + m + n;
    detail::Dinic net(m + n + 2);
    std::vector<int> to_first(static_cast<std::size_t>(m)), to_second(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        net.add_edge(source, 1 + e, 1);
        to_first[static_cast<std::size_t>(e)] =
            net.add_edge(1 + e, 1 + m + g.edges()[static_cast<std::size_t>(e)].first, 1);
        to_second[static_cast<std::size_t>(e)] =
            net.add_edge(1 + e, 1 + m + g.edges()[static_cast<std::size_t>(e)].second, 1);
    }
    for (int v = 0; v < n; ++v) net.add_edge(1 + m + v, sink, budget);
    const long long flow = net.max_flow(source, sink);
    if (flow == m) {
        result.feasible = true;
        result.cover.owner.assign(static_cast<std::size_t>(m), -1);
        std::vector<int> load(static_cast<std::size_t>(n), 0);
        for (int e = 0; e < m; ++e) {
            const auto& [u, v] = g.edges()[static_cast<std::size_t>(e)];
            const int owner = net.flow_through(to_first[static_cast<std::size_t>(e)]) > 0 ? u : v;
            result.cover.owner[static_cast<std::size_t>(e)] = owner;
            result.cover.max_load = std::max(result.cover.max_load, ++load[static_cast<std::size_t>(owner)]);
        }
        return result;
    }
    const std::vector<bool> reach = net.reachable(source);
    for (int v = 0; v < n; ++v)
        if (reach[static_cast<std::size_t>(1 + m + v)]) result.witness.vertices.push_back(v);
    for (int e = 0; e < m; ++e)
        if (reach[static_cast<std::size_t>(1 + e)]) result.witness.edge_indices.push_back(e);
    // Min-cut arithmetic guarantees the density violation; check anyway.
    if (result.witness.edge_indices.size() <=
        static_cast<std::size_t>(budget) * result.witness.vertices.size())
        throw Error("internal: infeasibility witness is not dense");
    return result;
}

// Structural covers matching the two psi instances. For degeneracy+1 each
// edge is owned by the endpoint peeled first (load <= degeneracy); for
// maxdeg+1 ownership follows an Eulerian orientation of the graph with
// odd-degree vertices paired by dummy edges (load <= ceil(deg/2)).
inline EdgeCover default_cover(const WeightedGraph& g, PsiKind kind) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    EdgeCover cover;
    cover.owner.assign(static_cast<std::size_t>(m), -1);
    std::vector<int> load(static_cast<std::size_t>(n), 0);
    const GraphStats st = stats(g);
    if (kind == PsiKind::degeneracy_plus_1) {
        std::vector<int> position(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(st.peel_order[static_cast<std::size_t>(i)])] = i;
        for (int e = 0; e < m; ++e) {
            const auto& [u, v] = g.edges()[static_cast<std::size_t>(e)];
            const int owner = position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(v)] ? u : v;
            cover.owner[static_cast<std::size_t>(e)] = owner;
            cover.max_load = std::max(cover.max_load, ++load[static_cast<std::size_t>(owner)]);
        }
        if (cover.max_load > st.degeneracy)
            throw Error("internal: peeling cover exceeded degeneracy budget");
        return cover;
    }
    if (kind != PsiKind::maxdeg_plus_1)
        throw Error("no default cover construction for psi kind " + to_string(kind));

    // Multigraph = g plus dummy edges pairing odd-degree vertices; all
    // degrees become even, so each component has an Eulerian circuit.
    struct Arc {
        int to;
        int edge;  // index into g.edges(), or -1 for dummy
        int twin;  // arc index of reverse direction
    };
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
    std::vector<Arc> arcs;
    auto add_multi_edge = [&](int u, int v, int edge) {
        const int a = static_cast<int>(arcs.size());
        arcs.push_back({v, edge, a + 1});
        arcs.push_back({u, edge, a});
        incident[static_cast<std::size_t>(u)].push_back(a);
        incident[static_cast<std::size_t>(v)].push_back(a + 1);
    };
    for (int e = 0; e < m; ++e)
        add_multi_edge(g.edges()[static_cast<std::size_t>(e)].first, g.edges()[static_cast<std::size_t>(e)].second, e);
    std::vector<int> odd;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) % 2 == 1) odd.push_back(v);
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2) add_multi_edge(odd[i], odd[i + 1], -1);

    std::vector<bool> used(arcs.size(), false);
    std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
        if (cursor[static_cast<std::size_t>(start)] >= incident[static_cast<std::size_t>(start)].size()) continue;
        // Hierholzer: walk until stuck (back at a vertex with no unused
        // arcs), splicing in detours; orientation = traversal direction.
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int v = stack.back();
            auto& cur = cursor[static_cast<std::size_t>(v)];
            bool advanced = false;
            while (cur < incident[static_cast<std::size_t>(v)].size()) {
                const int a = incident[static_cast<std::size_t>(v)][cur];
                ++cur;
                if (used[static_cast<std::size_t>(a)]) continue;
                used[static_cast<std::size_t>(a)] = true;
                used[static_cast<std::size_t>(arcs[static_cast<std::size_t>(a)].twin)] = true;
                if (arcs[static_cast<std::size_t>(a)].edge >= 0) {
                    // Edge traversed v -> to: the head owns it.
                    const int e = arcs[static_cast<std::size_t>(a)].edge;
                    const int head = arcs[static_cast<std::size_t>(a)].to;
                    cover.owner[static_cast<std::size_t>(e)] = head;
                    cover.max_load = std::max(cover.max_load, ++load[static_cast<std::size_t>(head)]);
                }
                stack.push_back(arcs[static_cast<std::size_t>(a)].to);
                advanced = true;
                break;
            }
            if (!advanced) stack.pop_back();
        }
    }
    if (cover.max_load > (st.max_degree + 1) / 2)
        throw Error("internal: balanced orientation exceeded ceil(max_degree/2)");
    return cover;
}

} // namespace hoffman
