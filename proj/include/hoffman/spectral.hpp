#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "hoffman/errors.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/rng.hpp"

namespace hoffman {

// Extreme eigenvalues of a (weighted) adjacency matrix with unit
// eigenvectors and explicit residual norms ||Av - lambda v||.
struct Spectrum {
    double lambda_1 = 0.0;
    double lambda_n = 0.0;
    std::vector<double> top_vector;
    std::vector<double> bottom_vector;
    double top_residual = 0.0;
    double bottom_residual = 0.0;
    double tolerance = 0.0;
};

namespace detail {

class DenseSym {
  public:
    explicit DenseSym(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

    static DenseSym adjacency(const WeightedGraph& g) {
        DenseSym m(g.vertex_count());
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& [i, j] = g.edges()[static_cast<std::size_t>(e)];
            m.at(i, j) = m.at(j, i) = g.weight(e);
        }
        return m;
    }

    int size() const { return n_; }
    double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }
    double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }

    std::vector<double> apply(const std::vector<double>& x) const {
        std::vector<double> y(static_cast<std::size_t>(n_), 0.0);
        for (int i = 0; i < n_; ++i) {
            double acc = 0.0;
            const double* row = &a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_)];
            for (int j = 0; j < n_; ++j) acc += row[j] * x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = acc;
        }
        return y;
    }

    double frobenius() const {
        double s = 0.0;
        for (const double v : a_) s += v * v;
        return std::sqrt(s);
    }

  private:
    int n_;
    std::vector<double> a_;
};

struct EigenDecomposition {
    std::vector<double> values;               // unsorted, direct from the sweep
    std::vector<std::vector<double>> vectors; // vectors[k] pairs with values[k]
};

// Cyclic Jacobi rotations on a dense symmetric matrix. Quadratically
// convergent and backward stable at desk scale; the off-diagonal Frobenius
// norm bounds the eigenvalue error, so sweeps run until it is well below
// the requested tolerance.
inline EigenDecomposition jacobi_eigen(DenseSym a, double tol) {
    const int n = a.size();
    std::vector<std::vector<double>> v(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    const double scale = std::max(a.frobenius(), 1e-300);
    const double target = std::max(tol * 1e-2, 1e-15 * scale);
    constexpr int kMaxSweeps = 100;
    double off = 0.0;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a.at(p, q) * a.at(p, q);
        off = std::sqrt(2.0 * off);
        if (off <= target) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                a.at(p, p) -= t * apq;
                a.at(q, q) += t * apq;
                a.at(p, q) = a.at(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a.at(r, p), arq = a.at(r, q);
                    a.at(r, p) = a.at(p, r) = arp - s * (arq + tau * arp);
                    a.at(r, q) = a.at(q, r) = arq + s * (arp - tau * arq);
                }
                for (int r = 0; r < n; ++r) {
                    auto& vr = v[static_cast<std::size_t>(r)];
                    const double vrp = vr[static_cast<std::size_t>(p)], vrq = vr[static_cast<std::size_t>(q)];
                    vr[static_cast<std::size_t>(p)] = vrp - s * (vrq + tau * vrp);
                    vr[static_cast<std::size_t>(q)] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
    if (off > std::max(tol, 1e-12 * scale))
        throw Error("Jacobi sweep did not converge; best off-diagonal norm " + std::to_string(off));
    EigenDecomposition d;
    d.values.resize(static_cast<std::size_t>(n));
    d.vectors.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (int k = 0; k < n; ++k) {
        d.values[static_cast<std::size_t>(k)] = a.at(k, k);
        for (int r = 0; r < n; ++r)
            d.vectors[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] =
                v[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
    }
    return d;
}

// Implicit-shift QL for a symmetric tridiagonal matrix; diag/off are
// overwritten, z accumulates eigenvectors of T. Classic EISPACK tql2.
inline void tridiag_ql(std::vector<double>& diag, std::vector<double>& off,
                       std::vector<std::vector<double>>& z) {
    const int n = static_cast<int>(diag.size());
    if (n == 0) return;
    off.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(diag[static_cast<std::size_t>(m)]) +
                                  std::abs(diag[static_cast<std::size_t>(m + 1)]);
                if (std::abs(off[static_cast<std::size_t>(m)]) <= 1e-300 + 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (++iter == 50) throw Error("tridiagonal QL iteration failed to converge");
                double g = (diag[static_cast<std::size_t>(l + 1)] - diag[static_cast<std::size_t>(l)]) /
                           (2.0 * off[static_cast<std::size_t>(l)]);
                double r = std::hypot(g, 1.0);
                g = diag[static_cast<std::size_t>(m)] - diag[static_cast<std::size_t>(l)] +
                    off[static_cast<std::size_t>(l)] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * off[static_cast<std::size_t>(i)];
                    const double b = c * off[static_cast<std::size_t>(i)];
                    r = std::hypot(f, g);
                    off[static_cast<std::size_t>(i + 1)] = r;
                    if (r == 0.0) {
                        diag[static_cast<std::size_t>(i + 1)] -= p;
                        off[static_cast<std::size_t>(m)] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = diag[static_cast<std::size_t>(i + 1)] - p;
                    r = (diag[static_cast<std::size_t>(i)] - g) * s + 2.0 * c * b;
                    p = s * r;
                    diag[static_cast<std::size_t>(i + 1)] = g + p;
                    g = c * r - b;
                    for (auto& row : z) {
                        const double zi1 = row[static_cast<std::size_t>(i + 1)];
                        const double zi = row[static_cast<std::size_t>(i)];
                        row[static_cast<std::size_t>(i + 1)] = s * zi + c * zi1;
                        row[static_cast<std::size_t>(i)] = c * zi - s * zi1;
                    }
                }
                if (r == 0.0 && m - 1 >= l) continue;
                diag[static_cast<std::size_t>(l)] -= p;
                off[static_cast<std::size_t>(l)] = g;
                off[static_cast<std::size_t>(m)] = 0.0;
            }
        } while (m != l);
    }
    off.pop_back();
}

// Deterministic pseudo-random unit start vector (seed-free on purpose:
// eigensolves carry no user-visible randomness).
inline std::vector<double> lanczos_start(int n, std::uint64_t salt) {
    Rng rng(derive_stream(0x5ec7a11ULL, salt, static_cast<std::uint64_t>(n)));
    std::vector<double> v(static_cast<std::size_t>(n));
    double norm = 0.0;
    for (auto& x : v) {
        x = rng.gaussian();
        norm += x * x;
    }
    norm = std::sqrt(norm);
    for (auto& x : v) x /= norm;
    return v;
}

} // namespace detail

namespace detail {

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Lanczos with full reorthogonalization for the two extreme eigenpairs of
// a sparse symmetric operator. Breakdowns (an invariant subspace was
// spanned, e.g. on disconnected graphs) restart with a fresh vector and a
// zero coupling, which block-splits the tridiagonal matrix. Residuals are
// verified with an explicit matvec before returning.
template <typename MatVec>
EigenDecomposition lanczos_extremes(const MatVec& apply, int n, double tol) {
    const int cap = std::min(n, 400);
    std::vector<std::vector<double>> basis;
    std::vector<double> alpha, beta;
    basis.push_back(lanczos_start(n, 1));
    double best_residual = 1e300;
    auto orthogonalized_fresh = [&](std::uint64_t salt) {
        for (int attempt = 0; attempt < 8; ++attempt) {
            std::vector<double> w = lanczos_start(n, salt + static_cast<std::uint64_t>(attempt) * 101);
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& b : basis) {
                    const double c = dot(w, b);
                    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] -= c * b[static_cast<std::size_t>(i)];
                }
            const double nw = norm2(w);
            if (nw > 1e-8) {
                for (auto& x : w) x /= nw;
                return w;
            }
        }
        throw Error("Lanczos could not extend the Krylov basis");
    };
    for (int k = 0; k < cap; ++k) {
        std::vector<double> w = apply(basis.back());
        if (k > 0) {
            const double b = beta.back();
            for (int i = 0; i < n; ++i)
                w[static_cast<std::size_t>(i)] -= b * basis[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)];
        }
        const double a = dot(w, basis.back());
        alpha.push_back(a);
        for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] -= a * basis.back()[static_cast<std::size_t>(i)];
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) {
                const double c = dot(w, b);
                for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] -= c * b[static_cast<std::size_t>(i)];
            }
        const double bnorm = norm2(w);
        const int steps = static_cast<int>(alpha.size());
        const bool breakdown = bnorm < 1e-12;
        const bool terminal = steps == cap || steps == n;
        if (breakdown || terminal || (steps >= 20 && steps % 10 == 0)) {
            std::vector<double> d = alpha;
            std::vector<double> e(beta.begin(), beta.end());
            std::vector<std::vector<double>> z(static_cast<std::size_t>(steps),
                                               std::vector<double>(static_cast<std::size_t>(steps), 0.0));
            for (int i = 0; i < steps; ++i) z[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
            tridiag_ql(d, e, z);
            int lo = 0, hi = 0;
            for (int i = 1; i < steps; ++i) {
                if (d[static_cast<std::size_t>(i)] < d[static_cast<std::size_t>(lo)]) lo = i;
                if (d[static_cast<std::size_t>(i)] > d[static_cast<std::size_t>(hi)]) hi = i;
            }
            auto ritz_vector = [&](int col) {
                std::vector<double> y(static_cast<std::size_t>(n), 0.0);
                for (int s = 0; s < steps; ++s) {
                    const double c = z[static_cast<std::size_t>(s)][static_cast<std::size_t>(col)];
                    for (int i = 0; i < n; ++i)
                        y[static_cast<std::size_t>(i)] += c * basis[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
                }
                const double nz = norm2(y);
                for (auto& x : y) x /= nz;
                return y;
            };
            auto residual_of = [&](const std::vector<double>& y, double lambda) {
                std::vector<double> r = apply(y);
                for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] -= lambda * y[static_cast<std::size_t>(i)];
                return norm2(r);
            };
            const std::vector<double> ylo = ritz_vector(lo), yhi = ritz_vector(hi);
            const double rlo = residual_of(ylo, d[static_cast<std::size_t>(lo)]);
            const double rhi = residual_of(yhi, d[static_cast<std::size_t>(hi)]);
            best_residual = std::min(best_residual, std::max(rlo, rhi));
            if (rlo <= tol && rhi <= tol) {
                EigenDecomposition out;
                out.values = {d[static_cast<std::size_t>(lo)], d[static_cast<std::size_t>(hi)]};
                out.vectors = {ylo, yhi};
                return out;
            }
            if (terminal)
                throw Error("Lanczos did not converge; best residual " +
                            std::to_string(best_residual));
        }
        if (breakdown) {
            basis.push_back(orthogonalized_fresh(static_cast<std::uint64_t>(steps) + 7));
            beta.push_back(0.0);
        } else {
            for (auto& x : w) x /= bnorm;
            beta.push_back(bnorm);
            basis.push_back(std::move(w));
        }
    }
    throw Error("Lanczos iteration cap reached; best residual " + std::to_string(best_residual));
}

// Deterministic sign: largest-magnitude coordinate made positive.
inline void fix_sign(std::vector<double>& v) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
    if (v[arg] < 0.0)
        for (auto& x : v) x = -x;
}

} // namespace detail

inline double default_eigen_tolerance(int n) { return n <= 64 ? 1e-9 : 1e-7; }

// Extreme eigenpairs of the (weighted) adjacency matrix. Dense Jacobi for
// n <= 64, Lanczos with full reorthogonalization above; both report
// explicit residual norms which are checked against the tolerance.
inline Spectrum extreme_eigenpairs(const WeightedGraph& g, double tol = -1.0) {
    const int n = g.vertex_count();
    if (n < 1) throw Error("spectrum of an empty graph is undefined");
    if (tol <= 0.0) tol = default_eigen_tolerance(n);
    Spectrum s;
    s.tolerance = tol;
    if (g.edge_count() == 0 || n == 1) {
        s.lambda_1 = s.lambda_n = 0.0;
        s.top_vector.assign(static_cast<std::size_t>(n), 0.0);
        s.top_vector[0] = 1.0;
        s.bottom_vector = s.top_vector;
        return s;
    }
    std::vector<double> top, bottom;
    double lo = 0.0, hi = 0.0;
    if (n <= 64) {
        const auto a = detail::DenseSym::adjacency(g);
        auto d = detail::jacobi_eigen(a, tol);
        int ilo = 0, ihi = 0;
        for (int i = 1; i < n; ++i) {
            if (d.values[static_cast<std::size_t>(i)] < d.values[static_cast<std::size_t>(ilo)]) ilo = i;
            if (d.values[static_cast<std::size_t>(i)] > d.values[static_cast<std::size_t>(ihi)]) ihi = i;
        }
        lo = d.values[static_cast<std::size_t>(ilo)];
        hi = d.values[static_cast<std::size_t>(ihi)];
        top = d.vectors[static_cast<std::size_t>(ihi)]; // copy: ihi may equal ilo
        bottom = std::move(d.vectors[static_cast<std::size_t>(ilo)]);
    } else {
        auto apply = [&](const std::vector<double>& x) {
            std::vector<double> y(x.size(), 0.0);
            for (int e = 0; e < g.edge_count(); ++e) {
                const auto& [i, j] = g.edges()[static_cast<std::size_t>(e)];
                const double w = g.weight(e);
                y[static_cast<std::size_t>(i)] += w * x[static_cast<std::size_t>(j)];
                y[static_cast<std::size_t>(j)] += w * x[static_cast<std::size_t>(i)];
            }
            return y;
        };
        auto d = detail::lanczos_extremes(apply, n, tol);
        lo = d.values[0];
        hi = d.values[1];
        bottom = std::move(d.vectors[0]);
        top = std::move(d.vectors[1]);
    }
    detail::fix_sign(top);
    detail::fix_sign(bottom);
    auto residual = [&](const std::vector<double>& v, double lambda) {
        std::vector<double> r(v.size(), 0.0);
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& [i, j] = g.edges()[static_cast<std::size_t>(e)];
            const double w = g.weight(e);
            r[static_cast<std::size_t>(i)] += w * v[static_cast<std::size_t>(j)];
            r[static_cast<std::size_t>(j)] += w * v[static_cast<std::size_t>(i)];
        }
        double s2 = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double diff = r[i] - lambda * v[i];
            s2 += diff * diff;
        }
        return std::sqrt(s2);
    };
    s.lambda_1 = hi;
    s.lambda_n = lo;
    s.top_vector = std::move(top);
    s.bottom_vector = std::move(bottom);
    s.top_residual = residual(s.top_vector, s.lambda_1);
    s.bottom_residual = residual(s.bottom_vector, s.lambda_n);
    const double scale = std::max(1.0, std::max(std::abs(hi), std::abs(lo)));
    if (s.top_residual > tol * scale * 10.0 || s.bottom_residual > tol * scale * 10.0)
        throw Error("eigensolver residual check failed; residuals " +
                    std::to_string(s.top_residual) + ", " + std::to_string(s.bottom_residual));
    return s;
}

// One real vector per vertex, all of a common dimension >= 1.
struct GramConfiguration {
    std::vector<std::vector<double>> vectors;

    int size() const { return static_cast<int>(vectors.size()); }
    int dimension() const { return vectors.empty() ? 0 : static_cast<int>(vectors[0].size()); }
};

// The quotient  sum_{i,j} A_ij <v_i, v_j>  /  sum_i ||v_i||^2 . Its minimum
// over all configurations equals lambda_n; any evaluation is therefore an
// upper witness, and the minimizing configuration an attainment witness.
inline double gram_quotient(const WeightedGraph& g, const GramConfiguration& cfg) {
    if (cfg.size() != g.vertex_count())
        throw Error("configuration size does not match vertex count");
    const int dim = cfg.dimension();
    if (dim < 1) throw Error("configuration dimension must be >= 1");
    for (const auto& v : cfg.vectors)
        if (static_cast<int>(v.size()) != dim) throw Error("configuration vectors have mixed dimensions");
    double denom = 0.0;
    for (const auto& v : cfg.vectors)
        for (const double x : v) denom += x * x;
    if (denom <= 0.0) throw Error("all-zero configuration");
    double numer = 0.0;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [i, j] = g.edges()[static_cast<std::size_t>(e)];
        double ip = 0.0;
        for (int d = 0; d < dim; ++d)
            ip += cfg.vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] *
                  cfg.vectors[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)];
        numer += 2.0 * g.weight(e) * ip; // both (i,j) and (j,i) terms
    }
    return numer / denom;
}

// Projected steepest descent with exact line search on the quotient above.
// The returned value is recomputed from the final configuration, so it is
// always a feasible quotient (never below lambda_n by more than roundoff);
// with enough iterations it also attains lambda_n from above.
inline std::pair<GramConfiguration, double>
minimize_gram_quotient(const WeightedGraph& g, int rank, int restarts, std::uint64_t seed,
                       double tol = 1e-9, int max_iterations = 60000) {
    const int n = g.vertex_count();
    if (n < 1) throw Error("empty graph");
    if (rank <= 0) rank = n; // full dimension avoids spurious local minima
    const std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(rank);

    auto apply_rows = [&](const std::vector<double>& v) {
        std::vector<double> av(total, 0.0);
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& [i, j] = g.edges()[static_cast<std::size_t>(e)];
            const double w = g.weight(e);
            const std::size_t oi = static_cast<std::size_t>(i) * static_cast<std::size_t>(rank);
            const std::size_t oj = static_cast<std::size_t>(j) * static_cast<std::size_t>(rank);
            for (int d = 0; d < rank; ++d) {
                av[oi + static_cast<std::size_t>(d)] += w * v[oj + static_cast<std::size_t>(d)];
                av[oj + static_cast<std::size_t>(d)] += w * v[oi + static_cast<std::size_t>(d)];
            }
        }
        return av;
    };
    auto inner = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (std::size_t i = 0; i < total; ++i) s += a[i] * b[i];
        return s;
    };

    GramConfiguration best_cfg;
    double best_value = 1e300;
    for (int restart = 0; restart < std::max(1, restarts); ++restart) {
        Rng rng(derive_stream(seed, static_cast<std::uint64_t>(restart), 0x6d67ULL));
        std::vector<double> v(total);
        for (auto& x : v) x = rng.gaussian();
        double nrm = std::sqrt(inner(v, v));
        for (auto& x : v) x /= nrm;

        const double stagnation_eps = std::min(1e-16, tol * 1e-7);
        double q = 0.0;
        int stagnant = 0;
        std::vector<double> av = apply_rows(v);
        q = inner(v, av); // ||v|| = 1
        for (int iter = 0; iter < max_iterations; ++iter) {
            // Steepest descent direction for the quotient at ||v||=1.
            std::vector<double> dir(total);
            for (std::size_t i = 0; i < total; ++i) dir[i] = -(av[i] - q * v[i]);
            const double gnorm2 = inner(dir, dir);
            if (gnorm2 < 1e-30) break;
            const std::vector<double> adir = apply_rows(dir);
            // q(v + t d) = (a + 2bt + ct^2) / (m + 2et + ft^2)
            const double a = q, b = inner(dir, av), c = inner(dir, adir);
            const double m = 1.0, e = inner(dir, v), f = gnorm2;
            // d/dt = 0  <=>  (ce - bf) t^2 + (cm - af) t + (bm - ae) = 0
            const double qa = c * e - b * f, qb = c * m - a * f, qc = b * m - a * e;
            double t = 0.0;
            if (std::abs(qa) > 1e-300) {
                const double disc = qb * qb - 4.0 * qa * qc;
                if (disc >= 0.0) {
                    const double r = std::sqrt(disc);
                    const double t1 = (-qb + r) / (2.0 * qa), t2 = (-qb - r) / (2.0 * qa);
                    auto value_at = [&](double tt) {
                        const double den = m + 2.0 * e * tt + f * tt * tt;
                        if (!(den > 1e-300)) return 1e300;
                        return (a + 2.0 * b * tt + c * tt * tt) / den;
                    };
                    t = value_at(t1) <= value_at(t2) ? t1 : t2;
                }
            } else if (std::abs(qb) > 1e-300) {
                t = -qc / qb;
            }
            if (!(t == t) || t == 0.0) break;
            double qn_num = a + 2.0 * b * t + c * t * t;
            double qn_den = m + 2.0 * e * t + f * t * t;
            if (!(qn_den > 1e-300)) break;
            const double q_new = qn_num / qn_den;
            if (q_new >= q - stagnation_eps * (1.0 + std::abs(q))) {
                if (++stagnant >= 3) break;
            } else {
                stagnant = 0;
            }
            for (std::size_t i = 0; i < total; ++i) v[i] += t * dir[i];
            nrm = std::sqrt(inner(v, v));
            for (auto& x : v) x /= nrm;
            av = apply_rows(v);
            q = inner(v, av);
        }
        GramConfiguration cfg;
        cfg.vectors.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(rank)));
        for (int i = 0; i < n; ++i)
            for (int d = 0; d < rank; ++d)
                cfg.vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] =
                    v[static_cast<std::size_t>(i) * static_cast<std::size_t>(rank) + static_cast<std::size_t>(d)];
        const double value = gram_quotient(g, cfg); // exact recomputation
        if (value < best_value) {
            best_value = value;
            best_cfg = std::move(cfg);
        }
    }
    return {best_cfg, best_value};
}

} // namespace hoffman
