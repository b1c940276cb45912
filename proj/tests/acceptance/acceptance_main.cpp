// Acceptance suite: end-to-end checks of the theorem machinery on fixed
// corpora, one pass/fail line per criterion. Exit code = number of failed
// criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hoffman/bounds.hpp"
#include "hoffman/cli.hpp"
#include "hoffman/clustering.hpp"
#include "hoffman/coloring.hpp"
#include "hoffman/cover_family.hpp"
#include "hoffman/formats.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/rounding.hpp"
#include "hoffman/spectral.hpp"
#include "hoffman/vector_coloring.hpp"
#include "hoffman/verify.hpp"

using namespace hoffman;

namespace {

struct Shared {
    std::vector<CorpusItem> corpus;                       // criterion 2/4/5 corpus
    std::map<std::string, VectorColoringResult> solved;   // id -> solver result
    std::map<std::string, int> chi;                       // id -> exact chromatic number
    // criterion 6 artifacts, reused by criterion 8
    std::vector<std::pair<WeightedGraph, CoverFamily>> families;
};

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

// 1. Hoffman tightness on complete graphs.
Outcome criterion_1(Shared&) {
    Outcome out;
    for (int n = 2; n <= 8; ++n) {
        const double bound = hoffman_bound(make_complete(n));
        const int chi = chromatic_number(make_complete(n)).chromatic_number;
        if (std::abs(bound - n) > 1e-9 || chi != n) {
            out.pass = false;
            out.detail += " K" + std::to_string(n) + ": bound=" + fmt(bound) +
                          " chi=" + std::to_string(chi);
        }
    }
    if (out.pass) out.detail = "hoffman_bound(K_n) = n and chi(K_n) = n for n = 2..8";
    return out;
}

// 2. Theorem 1 sandwich: hoffman <= chi_v estimate <= chi on the corpus.
Outcome criterion_2(Shared& shared) {
    Outcome out;
    int checked = 0;
    for (const auto& [id, g] : shared.corpus) {
        const VectorColoringResult vc =
            solve_vector_chromatic(g, -1, 6, derive_stream(20240201, detail::fnv64(id)));
        const int chi = chromatic_number(g).chromatic_number;
        shared.solved[id] = vc;
        shared.chi[id] = chi;
        ++checked;
        if (vc.k_lower > vc.k_upper + 2e-3) {
            out.pass = false;
            out.detail += " " + id + ": k_lower " + fmt(vc.k_lower) + " > k_upper " +
                          fmt(vc.k_upper) + " + 2e-3;";
        }
        if (vc.k_upper > chi + 2e-3) {
            out.pass = false;
            out.detail += " " + id + ": k_upper " + fmt(vc.k_upper) + " > chi " +
                          std::to_string(chi) + " + 2e-3;";
        }
    }
    if (out.pass)
        out.detail = "k_lower <= k_upper <= chi within 2e-3 on " + std::to_string(checked) +
                     " corpus graphs";
    return out;
}

// 3. C5 tightness at sqrt(5).
Outcome criterion_3(Shared& shared) {
    Outcome out;
    const double root5 = std::sqrt(5.0);
    const VectorColoringResult& vc = shared.solved.at("C5");
    const double bound = hoffman_bound(make_cycle(5));
    const double upper_gap = std::abs(vc.k_upper - root5);
    const double lower_gap = std::abs(bound - root5);
    out.pass = upper_gap <= 1e-3 && lower_gap <= 1e-6;
    out.detail = "|k_upper - sqrt5| = " + fmt(upper_gap) + " (<= 1e-3), |hoffman - sqrt5| = " +
                 fmt(lower_gap) + " (<= 1e-6)";
    return out;
}

// 4. Theorem 1 over random edge-supported weightings.
Outcome criterion_4(Shared& shared) {
    Outcome out;
    long long tested = 0, degenerate = 0;
    for (const auto& [id, g] : shared.corpus) {
        const double k_upper = shared.solved.at(id).k_upper;
        Rng rng(derive_stream(777, detail::fnv64(id)));
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<double> w(static_cast<std::size_t>(g.edge_count()));
            for (auto& x : w) x = rng.uniform(-1.0, 1.0);
            const WeightedGraph weighted = WeightedGraph::weighted(g.vertex_count(), g.edges(), w);
            const Spectrum s = extreme_eigenpairs(weighted);
            if (s.lambda_n >= -1e-9) {
                ++degenerate;
                continue;
            }
            ++tested;
            const double bound = 1.0 - s.lambda_1 / s.lambda_n;
            if (bound > k_upper + 2e-3) {
                out.pass = false;
                out.detail += " " + id + " trial " + std::to_string(trial) + ": bound " +
                              fmt(bound) + " > k_upper " + fmt(k_upper) + ";";
            }
        }
    }
    if (out.pass)
        out.detail = "1 - l1/ln <= k_upper + 2e-3 on " + std::to_string(tested) +
                     " weightings (" + std::to_string(degenerate) + " skipped for lambda_n >= 0)";
    return out;
}

// 5. Theorem 3 exhaustively over the lambda grid, plus the chi equality at 0.
Outcome criterion_5(Shared& shared) {
    Outcome out;
    int checked = 0;
    for (const auto& [id, g] : shared.corpus) {
        if (g.vertex_count() > 9) continue;
        std::vector<double> grid{0.0, 0.5, 1.0, 1.5, 2.0, extreme_eigenpairs(g).lambda_1};
        for (const double lambda : grid) {
            const auto exact = clustering_number_exact(g, lambda);
            if (!exact.feasible) {
                out.pass = false;
                out.detail += " " + id + ": infeasible at lambda " + fmt(lambda) + ";";
                continue;
            }
            const double bound = clustering_bound(g, lambda);
            ++checked;
            if (exact.k < bound - 1e-9) {
                out.pass = false;
                out.detail += " " + id + " lambda " + fmt(lambda) + ": k " +
                              std::to_string(exact.k) + " < bound " + fmt(bound) + ";";
            }
        }
        const auto zero = clustering_number_exact(g, 0.0);
        if (!zero.feasible || zero.k != shared.chi.at(id)) {
            out.pass = false;
            out.detail += " " + id + ": 0-clustering " + std::to_string(zero.k) + " != chi " +
                          std::to_string(shared.chi.at(id)) + ";";
        }
    }
    if (out.pass)
        out.detail = "clustering_number >= bound - 1e-9 on " + std::to_string(checked) +
                     " (graph, lambda) pairs; 0-clustering = chi everywhere";
    return out;
}

// 6. Theorem 2 exhaustively over every graph on n <= 5 vertices, read back
// from a generated graph6 enumeration file.
Outcome criterion_6(Shared& shared) {
    Outcome out;
    const auto dir = std::filesystem::temp_directory_path() / "hoffman_acceptance";
    std::filesystem::create_directories(dir);
    const auto path = dir / "all_graphs_n_le_5.g6";
    {
        std::ofstream f(path, std::ios::binary);
        cli::GenOptions gen;
        gen.family = "enumerate";
        gen.max_n = 5;
        std::ostringstream buffer;
        cli::run_gen(gen, buffer);
        f << buffer.str();
    }
    std::ifstream in(path);
    std::vector<WeightedGraph> graphs;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) graphs.push_back(parse_graph6(line));
    if (graphs.size() != 52) {
        out.pass = false;
        out.detail = "enumeration file holds " + std::to_string(graphs.size()) +
                     " graphs, expected 52 (= 1+2+4+11+34)";
        return out;
    }
    const std::vector<std::pair<PsiKind, Rational>> combos{
        {PsiKind::degeneracy_plus_1, Rational(1)}, {PsiKind::maxdeg_plus_1, Rational(1, 2)}};
    int checked = 0;
    for (const auto& g : graphs) {
        const int chi = chromatic_number(g).chromatic_number;
        for (const auto& [psi, alpha] : combos) {
            const auto res = covering_number_exact(g, psi, alpha);
            shared.families.push_back({g, res.family});
            const double bound = g.edge_count() == 0 ? 1.0 : covering_bound(g, alpha.to_double());
            ++checked;
            const std::string tag = emit_graph6(g) + "/" + to_string(psi);
            if (res.k < bound - 1e-9) {
                out.pass = false;
                out.detail += " " + tag + ": L " + std::to_string(res.k) + " < bound " +
                              fmt(bound) + ";";
            }
            if (static_cast<double>(res.k) < std::sqrt(static_cast<double>(chi)) - 1e-9 ||
                res.k > chi) {
                out.pass = false;
                out.detail += " " + tag + ": L " + std::to_string(res.k) +
                              " outside [sqrt(chi), chi] for chi " + std::to_string(chi) + ";";
            }
        }
    }
    if (out.pass)
        out.detail = "L >= bound - 1e-9 and sqrt(chi) <= L <= chi on " + std::to_string(checked) +
                     " (graph, psi) pairs from " + path.string();
    return out;
}

// 7. Lemma attainment and lower-bound fuzzing on random 6x6 weightings.
Outcome criterion_7(Shared&) {
    Outcome out;
    const auto base = make_complete(6);
    int attained = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Rng rng(derive_stream(4242, seed));
        std::vector<double> w(static_cast<std::size_t>(base.edge_count()));
        for (auto& x : w) x = rng.uniform(-1.0, 1.0);
        const WeightedGraph g = WeightedGraph::weighted(6, base.edges(), w);
        const double bottom = extreme_eigenpairs(g, 1e-11).lambda_n;
        const auto [cfg, value] = minimize_gram_quotient(g, -1, 2, seed);
        if (std::abs(value - bottom) > 1e-6) {
            out.pass = false;
            out.detail += " seed " + std::to_string(seed) + ": minimized " + fmt(value) +
                          " vs lambda_n " + fmt(bottom) + ";";
        } else {
            ++attained;
        }
        Rng fuzz(derive_stream(515151, seed));
        for (int trial = 0; trial < 10000; ++trial) {
            const int dim = 1 + static_cast<int>(fuzz.below(6));
            GramConfiguration random_cfg;
            bool nonzero = false;
            for (int v = 0; v < 6; ++v) {
                std::vector<double> row(static_cast<std::size_t>(dim));
                for (auto& x : row) {
                    x = fuzz.gaussian();
                    nonzero = nonzero || x != 0.0;
                }
                random_cfg.vectors.push_back(std::move(row));
            }
            if (!nonzero) continue;
            if (gram_quotient(g, random_cfg) < bottom - 1e-9) {
                out.pass = false;
                out.detail += " seed " + std::to_string(seed) + " fuzz trial " +
                              std::to_string(trial) + " fell below lambda_n;";
                break;
            }
        }
    }
    if (out.pass)
        out.detail = "minimizer within 1e-6 of lambda_n on " + std::to_string(attained) +
                     "/100 matrices; 10^6 fuzzed quotients stayed above lambda_n - 1e-9";
    return out;
}

// 8. Rounding on every family produced by criterion 6.
Outcome criterion_8(Shared& shared) {
    Outcome out;
    if (shared.families.empty()) {
        out.pass = false;
        out.detail = "no families carried over from criterion 6";
        return out;
    }
    int checked = 0;
    std::uint64_t seed = 0;
    for (const auto& [g, family] : shared.families) {
        ++seed;
        if (g.vertex_count() == 0) continue;
        const RoundingDistribution dist = rounding_distribution(g, family);
        const Rational expectation = exact_bad_edge_expectation(g, dist);
        const Rational ceiling = family.alpha * Rational(g.vertex_count());
        ++checked;
        if (!(expectation <= ceiling)) {
            out.pass = false;
            out.detail += " family " + std::to_string(seed) + ": E " + expectation.str() +
                          " > alpha*n " + ceiling.str() + ";";
        }
        const SimulationStats stats = simulate(g, family, 10000, derive_stream(909, seed));
        const double gap = std::abs(stats.mean - expectation.to_double());
        if (gap > 4.0 * stats.standard_error + 1e-12) {
            out.pass = false;
            out.detail += " family " + std::to_string(seed) + ": mean " + fmt(stats.mean) +
                          " is " + fmt(gap) + " from E with stderr " + fmt(stats.standard_error) +
                          ";";
        }
        const RoundingOutcome outcome = derandomize(g, family);
        if (outcome.bad_edges > expectation.floor()) {
            out.pass = false;
            out.detail += " family " + std::to_string(seed) + ": derandomized " +
                          std::to_string(outcome.bad_edges) + " > floor(E) " +
                          std::to_string(expectation.floor()) + ";";
        }
    }
    if (out.pass)
        out.detail = "E <= alpha*n, mean within 4 stderr, derandomized <= floor(E) on " +
                     std::to_string(checked) + " families";
    return out;
}

// 9. Least-eigenvalue magnitude of random 8-regular graphs on 500 vertices.
Outcome criterion_9(Shared&) {
    Outcome out;
    const double limit = 3.0 * std::sqrt(8.0);
    int failures = 0;
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto g = make_random_regular(500, 8, seed);
        const Spectrum s = extreme_eigenpairs(g);
        worst = std::max(worst, std::abs(s.lambda_n));
        if (std::abs(s.lambda_n) > limit) ++failures;
    }
    out.pass = failures <= 1;
    out.detail = "max |lambda_n| = " + fmt(worst) + " over 20 seeds vs limit " + fmt(limit) +
                 " (" + std::to_string(failures) + " failures allowed <= 1)";
    return out;
}

// 10. Byte-identical verify output across two runs with the same seed.
Outcome criterion_10(Shared&) {
    Outcome out;
    VerifyOptions opt;
    opt.seed = 31337;
    auto run_once = [&]() {
        const auto records = run_verification(default_corpus(), opt);
        return records_to_jsonl(records);
    };
    const std::string first = run_once();
    const std::string second = run_once();
    out.pass = first == second && !first.empty();
    if (out.pass) {
        std::istringstream in(first);
        std::string line;
        long long lines = 0, violated = 0;
        while (std::getline(in, line)) {
            ++lines;
            if (line.find("\"violated\"") != std::string::npos) ++violated;
        }
        out.detail = "two runs produced " + std::to_string(first.size()) +
                     " identical bytes (" + std::to_string(lines) + " records, " +
                     std::to_string(violated) + " violated)";
        if (violated != 0) out.pass = false;
    } else {
        out.detail = "outputs differ";
    }
    return out;
}

} // namespace

int main() {
    struct Entry {
        int number;
        const char* label;
        Outcome (*run)(Shared&);
    };
    const std::vector<Entry> entries{
        {1, "hoffman tightness on complete graphs", criterion_1},
        {2, "vector chromatic sandwich on the corpus", criterion_2},
        {3, "C5 tightness at sqrt(5)", criterion_3},
        {4, "spectral bound over random weightings", criterion_4},
        {5, "clustering bound exhaustive", criterion_5},
        {6, "covering bound exhaustive on n <= 5", criterion_6},
        {7, "quotient minimization attainment", criterion_7},
        {8, "rounding expectations and derandomization", criterion_8},
        {9, "random regular least-eigenvalue check", criterion_9},
        {10, "deterministic verify output", criterion_10},
    };
    Shared shared;
    shared.corpus = default_corpus();
    int failures = 0;
    for (const auto& entry : entries) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = entry.run(shared);
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %2d: %s - %s (%.1fs)\n", outcome.pass ? "PASS" : "FAIL",
                    entry.number, entry.label, outcome.detail.c_str(), seconds);
        std::fflush(stdout);
        if (!outcome.pass) ++failures;
    }
    if (failures == 0)
        std::printf("all 10 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
