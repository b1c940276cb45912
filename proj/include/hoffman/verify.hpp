#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <istream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hoffman/bounds.hpp"
#include "hoffman/certificates.hpp"
#include "hoffman/clustering.hpp"
#include "hoffman/coloring.hpp"
#include "hoffman/cover_family.hpp"
#include "hoffman/errors.hpp"
#include "hoffman/formats.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/psi.hpp"
#include "hoffman/spectral.hpp"
#include "hoffman/vector_coloring.hpp"

namespace hoffman {

// One materialized theorem inequality: oracle value vs. lower bound.
struct VerificationRecord {
    std::string graph_id;
    std::string parameter;
    double bound = 0.0;
    double oracle = 0.0;
    double slack = 0.0; // oracle - bound
    std::string status; // "holds" | "violated" | "skipped"
    std::string reason; // skip reason, empty otherwise
    double tolerance = 0.0;
};

inline Json record_to_json(const VerificationRecord& r) {
    Json j;
    j["v"] = kSchemaVersion;
    j["type"] = "verification";
    j["id"] = r.graph_id;
    j["parameter"] = r.parameter;
    if (r.status != "skipped") {
        j["bound"] = r.bound;
        j["oracle"] = r.oracle;
        j["slack"] = r.slack;
    }
    j["status"] = r.status;
    if (!r.reason.empty()) j["reason"] = r.reason;
    j["tolerance"] = r.tolerance;
    return j;
}

struct CorpusItem {
    std::string id;
    WeightedGraph graph;
};

// K2..K6, C4..C9, the Petersen graph, and ten seeded Erdos-Renyi graphs on
// at most 9 vertices.
inline std::vector<CorpusItem> default_corpus() {
    std::vector<CorpusItem> corpus;
    for (int n = 2; n <= 6; ++n)
        corpus.push_back({"K" + std::to_string(n), make_complete(n)});
    for (int n = 4; n <= 9; ++n)
        corpus.push_back({"C" + std::to_string(n), make_cycle(n)});
    corpus.push_back({"petersen", make_petersen()});
    for (int i = 0; i < 10; ++i) {
        const int n = 6 + i % 4;
        const std::uint64_t seed = 101 + static_cast<std::uint64_t>(i);
        corpus.push_back({"er_n" + std::to_string(n) + "_s" + std::to_string(seed),
                          make_erdos_renyi(n, 0.5, seed)});
    }
    return corpus;
}

// Corpus files: one graph per line, either a generator spec
// ("complete 4", "cycle 5", "petersen", "random_regular n d seed",
// "erdos_renyi n p seed", "complete_bipartite a b") or "g6 <string>".
inline std::vector<CorpusItem> load_corpus(std::istream& in) {
    std::vector<CorpusItem> corpus;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind[0] == '#') continue;
        auto fail = [&](const std::string& why) {
            throw ParseError("corpus line " + std::to_string(lineno) + ": " + why);
        };
        std::string id = kind;
        WeightedGraph g;
        if (kind == "complete") {
            int n;
            if (!(ls >> n)) fail("expected 'complete n'");
            g = make_complete(n);
            id += "_" + std::to_string(n);
        } else if (kind == "cycle") {
            int n;
            if (!(ls >> n)) fail("expected 'cycle n'");
            g = make_cycle(n);
            id += "_" + std::to_string(n);
        } else if (kind == "petersen") {
            g = make_petersen();
        } else if (kind == "complete_bipartite") {
            int a, b;
            if (!(ls >> a >> b)) fail("expected 'complete_bipartite a b'");
            g = make_complete_bipartite(a, b);
            id += "_" + std::to_string(a) + "_" + std::to_string(b);
        } else if (kind == "random_regular") {
            int n, d;
            std::uint64_t seed;
            if (!(ls >> n >> d >> seed)) fail("expected 'random_regular n d seed'");
            g = make_random_regular(n, d, seed);
            id += "_" + std::to_string(n) + "_" + std::to_string(d) + "_" + std::to_string(seed);
        } else if (kind == "erdos_renyi") {
            int n;
            double p;
            std::uint64_t seed;
            if (!(ls >> n >> p >> seed)) fail("expected 'erdos_renyi n p seed'");
            g = make_erdos_renyi(n, p, seed);
            id += "_" + std::to_string(n) + "_s" + std::to_string(seed);
        } else if (kind == "g6") {
            std::string text;
            if (!(ls >> text)) fail("expected 'g6 <string>'");
            g = parse_graph6(text);
            id = "g6_" + std::to_string(lineno);
        } else {
            fail("unknown generator '" + kind + "'");
        }
        corpus.push_back({id, g});
    }
    return corpus;
}

struct VerifyOptions {
    double tolerance = 1e-6;
    std::uint64_t seed = 0;
    std::string only;                     // empty = all checks
    int threads = 0;                      // 0 = auto (HOFFMAN_THREADS / hardware)
    std::vector<double> lambda_grid{0.0, 0.5, 1.0, 1.5, 2.0};
    bool lambda_grid_add_top = true;      // also check lambda = lambda_1
    int chromatic_cap = 16;
    int clustering_cap = 11;
    int covering_cap = 7;
    int solver_cap = 128; // largest n for the thm1 / lemma numerical solvers
    int vc_restarts = 6;
    bool negative_control = false;        // corrupt oracles; must make verify fail
};

namespace detail {

// Deterministic string hash (std::hash is not pinned across platforms).
inline std::uint64_t fnv64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

inline int worker_count(int requested) {
    if (requested > 0) return requested;
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("HOFFMAN_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

// Runs job(i) for i in [0, count) on a small pool; results are merged by
// index, so the output is identical for any worker count.
inline void parallel_for(int count, int threads, const std::function<void(int)>& job) {
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&]() {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                job(i);
            }
        });
    for (auto& th : pool) th.join();
}

} // namespace detail

// The full verification matrix for one graph. Oracle failures from size
// caps become skipped records; a violated record means a theorem
// inequality failed at the configured tolerance.
inline std::vector<VerificationRecord> verify_graph(const CorpusItem& item,
                                                    const VerifyOptions& opt) {
    std::vector<VerificationRecord> records;
    const WeightedGraph& g = item.graph;
    const double tol = opt.tolerance;
    const double corrupt = opt.negative_control ? 1.0 : 0.0;
    auto want = [&](const std::string& name) {
        return opt.only.empty() || name.rfind(opt.only, 0) == 0;
    };
    auto push = [&](const std::string& parameter, double bound, double oracle, double check_tol) {
        VerificationRecord r;
        r.graph_id = item.id;
        r.parameter = parameter;
        r.bound = bound;
        r.oracle = oracle - corrupt;
        r.slack = r.oracle - bound;
        r.tolerance = check_tol;
        r.status = r.slack < -check_tol ? "violated" : "holds";
        records.push_back(r);
    };
    auto skip = [&](const std::string& parameter, const std::string& why) {
        VerificationRecord r;
        r.graph_id = item.id;
        r.parameter = parameter;
        r.status = "skipped";
        r.reason = why;
        r.tolerance = tol;
        records.push_back(r);
    };

    if (g.vertex_count() == 0) {
        skip("all", "empty graph");
        return records;
    }

    int chi = -1;
    if (g.vertex_count() <= opt.chromatic_cap)
        chi = chromatic_number(g).chromatic_number;

    if (want("hoffman")) {
        if (chi >= 0)
            push("hoffman_vs_chi", hoffman_bound(g), chi, tol);
        else
            skip("hoffman_vs_chi", "chromatic cap");
    }

    if (want("thm1")) {
        if (g.vertex_count() > opt.solver_cap) {
            skip("thm1_hoffman_vs_chiv", "solver cap");
        } else {
            const VectorColoringResult vc = solve_vector_chromatic(
                g, -1, opt.vc_restarts, derive_stream(opt.seed, 0x7631ULL, detail::fnv64(item.id)));
            push("thm1_hoffman_vs_chiv", vc.k_lower, vc.k_upper, tol);
            if (chi >= 0)
                push("thm1_chiv_vs_chi", vc.k_upper, chi, tol);
            else
                skip("thm1_chiv_vs_chi", "chromatic cap");
        }
    }

    if (want("thm2")) {
        const std::vector<std::pair<PsiKind, Rational>> combos{
            {PsiKind::degeneracy_plus_1, Rational(1)},
            {PsiKind::maxdeg_plus_1, Rational(1, 2)}};
        for (const auto& [psi, alpha] : combos) {
            const std::string name = "thm2_covering_" + to_string(psi) + "_a" + alpha.str();
            if (g.vertex_count() > opt.covering_cap) {
                skip(name, "covering cap");
                continue;
            }
            const auto exact = covering_number_exact(g, psi, alpha);
            push(name, covering_bound(g, alpha.to_double()), exact.k, 1e-9);
        }
    }

    if (want("thm3")) {
        if (g.vertex_count() > opt.clustering_cap) {
            skip("thm3_clustering", "clustering cap");
        } else {
            std::vector<double> grid = opt.lambda_grid;
            if (opt.lambda_grid_add_top)
                grid.push_back(g.edge_count() > 0 ? extreme_eigenpairs(g).lambda_1 : 0.0);
            for (const double lambda : grid) {
                if (lambda < 0.0) continue;
                const std::string name = "thm3_clustering_l" + std::to_string(lambda);
                const auto exact = clustering_number_exact(g, lambda);
                if (!exact.feasible) {
                    skip(name, "infeasible lambda");
                    continue;
                }
                const double bound =
                    g.edge_count() == 0 && lambda <= 0.0 ? 1.0 : clustering_bound(g, lambda);
                push(name, bound, exact.k, 1e-9);
            }
        }
    }

    if (want("chi0")) {
        if (g.vertex_count() > opt.clustering_cap || chi < 0) {
            skip("chi0_equals_chi", "oracle cap");
        } else if (g.unit_weights()) {
            const auto zero = clustering_number_exact(g, 0.0);
            VerificationRecord r;
            r.graph_id = item.id;
            r.parameter = "chi0_equals_chi";
            r.bound = chi;
            r.oracle = zero.feasible ? zero.k - corrupt : -1.0;
            r.slack = r.oracle - r.bound;
            r.tolerance = 0.0;
            r.status = r.slack == 0.0 ? "holds" : "violated";
            records.push_back(r);
        }
    }

    if (want("lemma")) {
        if (g.edge_count() == 0) {
            skip("lemma_attainment", "edgeless");
        } else if (g.vertex_count() > opt.solver_cap) {
            skip("lemma_attainment", "solver cap");
        } else {
            const Spectrum s = extreme_eigenpairs(g);
            const auto [cfg, value] = minimize_gram_quotient(
                g, -1, 3, derive_stream(opt.seed, 0x6c65ULL, detail::fnv64(item.id)));
            VerificationRecord r;
            r.graph_id = item.id;
            r.parameter = "lemma_attainment";
            r.bound = s.lambda_n;
            r.oracle = value - corrupt;
            r.slack = r.oracle - r.bound;
            r.tolerance = tol;
            // Attainment: the minimized quotient must match lambda_n both ways.
            r.status = (r.slack >= -1e-9 && r.slack <= tol) ? "holds" : "violated";
            records.push_back(r);
        }
    }

    return records;
}

// Corpus-wide run with a deterministic ordered merge. A graph whose checks
// throw (solver failure, unexpected input) yields one skipped record with
// the message instead of tearing down the worker.
inline std::vector<VerificationRecord> run_verification(const std::vector<CorpusItem>& corpus,
                                                        const VerifyOptions& opt) {
    std::vector<std::vector<VerificationRecord>> partial(corpus.size());
    detail::parallel_for(static_cast<int>(corpus.size()), detail::worker_count(opt.threads),
                         [&](int i) {
                             const auto& item = corpus[static_cast<std::size_t>(i)];
                             try {
                                 partial[static_cast<std::size_t>(i)] = verify_graph(item, opt);
                             } catch (const std::exception& e) {
                                 VerificationRecord r;
                                 r.graph_id = item.id;
                                 r.parameter = "all";
                                 r.status = "skipped";
                                 r.reason = std::string("exception: ") + e.what();
                                 r.tolerance = opt.tolerance;
                                 partial[static_cast<std::size_t>(i)] = {r};
                             }
                         });
    std::vector<VerificationRecord> all;
    for (auto& part : partial)
        for (auto& r : part) all.push_back(std::move(r));
    return all;
}

inline bool any_violated(const std::vector<VerificationRecord>& records) {
    for (const auto& r : records)
        if (r.status == "violated") return true;
    return false;
}

inline std::string records_to_jsonl(const std::vector<VerificationRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        out += record_to_json(r).dump();
        out += "\n";
    }
    return out;
}

} // namespace hoffman
