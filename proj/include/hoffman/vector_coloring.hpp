#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "hoffman/bounds.hpp"
#include "hoffman/coloring.hpp"
#include "hoffman/errors.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/rng.hpp"
#include "hoffman/simplex.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman {

// Numerical upper and spectral lower estimates of the vector chromatic
// number, with the certificate configuration that realizes the upper one.
struct VectorColoringResult {
    double k_upper = 1.0;
    double k_lower = 1.0;
    double max_edge_ip = 0.0; // exact recomputation over the assignment
    GramConfiguration assignment;
    int rank = 0;
    int restarts = 0;
};

namespace detail {

inline double max_edge_inner_product(const WeightedGraph& g,
                                     const std::vector<std::vector<double>>& u) {
    double worst = -1e300;
    for (const auto& [i, j] : g.edges()) {
        double ip = 0.0;
        const auto& a = u[static_cast<std::size_t>(i)];
        const auto& b = u[static_cast<std::size_t>(j)];
        for (std::size_t d = 0; d < a.size(); ++d) ip += a[d] * b[d];
        worst = std::max(worst, ip);
    }
    return worst;
}

inline void renormalize_rows(std::vector<std::vector<double>>& u) {
    for (auto& row : u) {
        double norm = 0.0;
        for (const double x : row) norm += x * x;
        norm = std::sqrt(norm);
        if (norm > 0.0)
            for (double& x : row) x /= norm;
        else
            row[0] = 1.0;
    }
}

// Smoothed maximum over the edge inner products and its Riemannian
// gradient. Softmax weights are computed against the shifted maximum, so
// small temperatures stay well conditioned.
struct SmoothedMax {
    const WeightedGraph* g;
    double temperature;

    double value(const std::vector<std::vector<double>>& u) const {
        const double mx = max_edge_inner_product(*g, u);
        double z = 0.0;
        for (const auto& [i, j] : g->edges()) {
            double ip = 0.0;
            const auto& a = u[static_cast<std::size_t>(i)];
            const auto& b = u[static_cast<std::size_t>(j)];
            for (std::size_t d = 0; d < a.size(); ++d) ip += a[d] * b[d];
            z += std::exp((ip - mx) / temperature);
        }
        return mx + temperature * std::log(z);
    }

    std::vector<std::vector<double>> gradient(const std::vector<std::vector<double>>& u) const {
        const std::size_t dim = u[0].size();
        const double mx = max_edge_inner_product(*g, u);
        std::vector<double> w(static_cast<std::size_t>(g->edge_count()));
        double z = 0.0;
        for (int e = 0; e < g->edge_count(); ++e) {
            const auto& [i, j] = g->edges()[static_cast<std::size_t>(e)];
            double ip = 0.0;
            for (std::size_t d = 0; d < dim; ++d)
                ip += u[static_cast<std::size_t>(i)][d] * u[static_cast<std::size_t>(j)][d];
            w[static_cast<std::size_t>(e)] = std::exp((ip - mx) / temperature);
            z += w[static_cast<std::size_t>(e)];
        }
        std::vector<std::vector<double>> grad(u.size(), std::vector<double>(dim, 0.0));
        for (int e = 0; e < g->edge_count(); ++e) {
            const auto& [i, j] = g->edges()[static_cast<std::size_t>(e)];
            const double we = w[static_cast<std::size_t>(e)] / z;
            for (std::size_t d = 0; d < dim; ++d) {
                grad[static_cast<std::size_t>(i)][d] += we * u[static_cast<std::size_t>(j)][d];
                grad[static_cast<std::size_t>(j)][d] += we * u[static_cast<std::size_t>(i)][d];
            }
        }
        // Project onto the tangent spaces of the unit spheres.
        for (std::size_t v = 0; v < u.size(); ++v) {
            double ip = 0.0;
            for (std::size_t d = 0; d < dim; ++d) ip += grad[v][d] * u[v][d];
            for (std::size_t d = 0; d < dim; ++d) grad[v][d] -= ip * u[v][d];
        }
        return grad;
    }
};

} // namespace detail

// Minimizes the maximum edge inner product over products of unit spheres:
// annealed softmax smoothing with projected gradient descent and Armijo
// backtracking. One restart starts from a proper coloring mapped through
// the simplex frame (so the result never exceeds that coloring's class
// count); the rest are random unit configurations. The best exact maximum
// seen across all iterates is kept, together with its configuration.
inline VectorColoringResult solve_vector_chromatic(const WeightedGraph& g, int rank,
                                                   int restarts, std::uint64_t seed,
                                                   double tol = 1e-6) {
    const int n = g.vertex_count();
    if (n < 1) throw Error("empty graph");
    if (!g.unit_weights() && g.is_weighted())
        throw Error("vector chromatic solver expects a unit-weight graph");
    VectorColoringResult result;
    if (g.edge_count() == 0) {
        result.k_upper = result.k_lower = 1.0;
        result.assignment.vectors.assign(static_cast<std::size_t>(n), {1.0});
        result.rank = 1;
        return result;
    }
    result.k_lower = hoffman_bound(g);
    if (restarts < 1) restarts = 1;

    // Low-rank default with an automatic full-rank retry below.
    const int default_rank =
        std::min(n, static_cast<int>(std::ceil(std::sqrt(2.0 * n))) + 2);
    int r = rank > 0 ? rank : default_rank;

    const Coloring warm =
        n <= 14 ? chromatic_number(g).witness : dsatur_greedy(g);

    double best_t = 1e300;
    std::vector<std::vector<double>> best_u;

    auto run_at_rank = [&](int dim) {
        for (int restart = 0; restart < restarts; ++restart) {
            std::vector<std::vector<double>> u(static_cast<std::size_t>(n),
                                               std::vector<double>(static_cast<std::size_t>(dim), 0.0));
            if (restart == 0 && warm.k >= 2 && warm.k - 1 <= dim) {
                const SimplexFrame frame = simplex_frame(warm.k);
                for (int v = 0; v < n; ++v)
                    for (int d = 0; d < warm.k - 1; ++d)
                        u[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)] =
                            frame.vectors[static_cast<std::size_t>(warm.color[static_cast<std::size_t>(v)])]
                                         [static_cast<std::size_t>(d)];
            } else {
                Rng rng(derive_stream(seed, static_cast<std::uint64_t>(restart),
                                      static_cast<std::uint64_t>(dim)));
                for (auto& row : u)
                    for (double& x : row) x = rng.gaussian();
                detail::renormalize_rows(u);
            }
            {
                const double t0 = detail::max_edge_inner_product(g, u);
                if (t0 < best_t) {
                    best_t = t0;
                    best_u = u;
                }
            }
            // Anneal until the smoothing bias (temperature * log m) is well
            // under the requested tolerance.
            const double floor_temperature =
                std::max(5e-7, tol / (50.0 * std::log(2.0 + g.edge_count())));
            double eta = 0.25;
            for (double temperature = 0.5; temperature >= floor_temperature; temperature *= 0.5) {
                const detail::SmoothedMax smooth{&g, temperature};
                double f = smooth.value(u);
                for (int iter = 0; iter < 220; ++iter) {
                    const auto grad = smooth.gradient(u);
                    double gnorm2 = 0.0;
                    for (const auto& row : grad)
                        for (const double x : row) gnorm2 += x * x;
                    if (gnorm2 < 1e-18) break;
                    eta = std::min(eta * 2.0, 1.0);
                    bool stepped = false;
                    for (int bt = 0; bt < 40; ++bt) {
                        auto cand = u;
                        for (std::size_t v = 0; v < cand.size(); ++v)
                            for (std::size_t d = 0; d < cand[v].size(); ++d)
                                cand[v][d] -= eta * grad[v][d];
                        detail::renormalize_rows(cand);
                        const double fc = smooth.value(cand);
                        if (fc <= f - 0.1 * eta * gnorm2) {
                            u = std::move(cand);
                            const double t = detail::max_edge_inner_product(g, u);
                            if (t < best_t) {
                                best_t = t;
                                best_u = u;
                            }
                            if (f - fc < 1e-15 * (1.0 + std::abs(f))) iter = 220;
                            f = fc;
                            stepped = true;
                            break;
                        }
                        eta *= 0.5;
                    }
                    if (!stepped) break;
                }
            }
        }
    };

    run_at_rank(r);
    if (r < n && (best_t >= 0.0 || 1.0 - 1.0 / best_t > result.k_lower + 1e-3)) {
        // Poor convergence at low rank: retry at full dimension.
        run_at_rank(n);
        r = n;
    }
    if (best_t >= 0.0)
        throw Error("vector coloring solver failed (max inner product " + std::to_string(best_t) +
                    " >= 0); increase restarts");

    result.max_edge_ip = best_t;
    result.k_upper = 1.0 - 1.0 / best_t;
    result.assignment.vectors = std::move(best_u);
    result.rank = r;
    result.restarts = restarts;
    return result;
}

struct VectorColoringCheck {
    bool pass = true;
    double worst_norm_violation = 0.0; // max | ||u|| - 1 |
    double worst_edge_violation = 0.0; // max over edges of <u_i,u_j> + 1/(k-1)
    int violated_edges = 0;
};

// Checks unit norms and every edge constraint <u_i,u_j> <= -1/(k-1)
// against explicit recomputation.
inline VectorColoringCheck verify_vector_coloring(const WeightedGraph& g,
                                                  const GramConfiguration& assignment, double k,
                                                  double tol = 1e-9) {
    if (assignment.size() != g.vertex_count())
        throw Error("assignment size does not match vertex count");
    const int dim = assignment.dimension();
    for (const auto& v : assignment.vectors)
        if (static_cast<int>(v.size()) != dim)
            throw Error("assignment vectors have mixed dimensions");
    VectorColoringCheck check;
    for (const auto& v : assignment.vectors) {
        double norm = 0.0;
        for (const double x : v) norm += x * x;
        check.worst_norm_violation =
            std::max(check.worst_norm_violation, std::abs(std::sqrt(norm) - 1.0));
    }
    if (check.worst_norm_violation > tol) check.pass = false;
    if (g.edge_count() > 0) {
        if (k <= 1.0) {
            check.pass = false;
            check.worst_edge_violation = 2.0; // constraint set is empty below k=1
            check.violated_edges = g.edge_count();
            return check;
        }
        const double limit = -1.0 / (k - 1.0);
        for (const auto& [i, j] : g.edges()) {
            double ip = 0.0;
            for (int d = 0; d < dim; ++d)
                ip += assignment.vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] *
                      assignment.vectors[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)];
            const double violation = ip - limit;
            check.worst_edge_violation = std::max(check.worst_edge_violation, violation);
            if (violation > tol) {
                check.pass = false;
                ++check.violated_edges;
            }
        }
    }
    return check;
}

// Certificates as TSV of vector coordinates, one row per vertex.
inline std::string configuration_to_tsv(const GramConfiguration& cfg) {
    std::ostringstream out;
    char buf[64];
    for (const auto& row : cfg.vectors) {
        for (std::size_t d = 0; d < row.size(); ++d) {
            std::snprintf(buf, sizeof(buf), "%.17g", row[d]);
            out << (d ? "\t" : "") << buf;
        }
        out << "\n";
    }
    return out.str();
}

inline GramConfiguration configuration_from_tsv(std::istream& in) {
    GramConfiguration cfg;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<double> row;
        double x;
        while (ls >> x) row.push_back(x);
        if (row.empty()) throw ParseError("bad TSV row in configuration");
        cfg.vectors.push_back(std::move(row));
    }
    if (!cfg.vectors.empty())
        for (const auto& row : cfg.vectors)
            if (row.size() != cfg.vectors[0].size())
                throw ParseError("TSV configuration has mixed dimensions");
    return cfg;
}

} // namespace hoffman
