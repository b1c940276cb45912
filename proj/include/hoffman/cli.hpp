#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hoffman/bounds.hpp"
#include "hoffman/certificates.hpp"
#include "hoffman/clustering.hpp"
#include "hoffman/coloring.hpp"
#include "hoffman/cover_family.hpp"
#include "hoffman/errors.hpp"
#include "hoffman/formats.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/rounding.hpp"
#include "hoffman/vector_coloring.hpp"
#include "hoffman/verify.hpp"

namespace hoffman::cli {

struct InputGraph {
    std::string id;
    WeightedGraph graph;
};

struct InputError {
    std::string id;
    int line = 0;
    std::string message;
};

struct LoadedInput {
    std::vector<InputGraph> graphs;
    std::vector<InputError> errors;
};

// Reads graphs from a stream. graph6 carries one graph per line (errors
// are reported per line and reading continues); DIMACS and edge-list files
// carry a single graph.
inline LoadedInput load_graphs(std::istream& in, const std::string& format,
                               const std::string& source_name) {
    LoadedInput out;
    if (format == "graph6") {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string trimmed = line;
            while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
                trimmed.pop_back();
            if (trimmed.empty()) continue;
            const std::string id = source_name + ":" + std::to_string(lineno);
            try {
                out.graphs.push_back({id, parse_graph6(trimmed)});
            } catch (const Error& e) {
                out.errors.push_back({id, lineno, e.what()});
            }
        }
    } else if (format == "dimacs") {
        out.graphs.push_back({source_name, parse_dimacs(in)});
    } else if (format == "edgelist") {
        out.graphs.push_back({source_name, parse_weighted_edgelist(in)});
    } else {
        throw ParseError("unknown input format '" + format + "'");
    }
    return out;
}

inline LoadedInput load_graphs_from_path(const std::string& path, const std::string& format) {
    if (path == "-") return load_graphs(std::cin, format, "-");
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    return load_graphs(in, format, std::filesystem::path(path).filename().string());
}

struct BoundsOptions {
    std::string input = "-";
    std::string format = "graph6";
    std::optional<double> alpha;
    std::optional<double> lambda;
    std::string weights_path;    // optional weighting for the spectral bound
    int improve_iterations = 0;  // 0 = no weight search
    std::uint64_t improve_seed = 0;
};

// One JSON report per input graph, in input order. Parse failures become
// error records; processing continues.
inline int run_bounds(const BoundsOptions& opt, std::istream& in, std::ostream& out) {
    LoadedInput input;
    if (opt.input == "-")
        input = load_graphs(in, opt.format, "-");
    else
        input = load_graphs_from_path(opt.input, opt.format);

    std::optional<WeightedGraph> weighting;
    if (!opt.weights_path.empty()) {
        std::ifstream wf(opt.weights_path);
        if (!wf) throw Error("cannot open weights file: " + opt.weights_path);
        weighting = parse_weighted_edgelist(wf);
    }

    for (const auto& err : input.errors) {
        Json j;
        j["v"] = kSchemaVersion;
        j["type"] = "error";
        j["id"] = err.id;
        j["line"] = err.line;
        j["message"] = err.message;
        out << j.dump() << "\n";
    }
    for (const auto& [id, g] : input.graphs) {
        BoundReport report;
        report.graph_id = id;
        const GraphStats st = stats(g);
        report.n = st.n;
        report.m = st.m;
        report.avg_degree = st.avg_degree;
        report.edgeless = g.edge_count() == 0;

        const WeightedGraph* bound_graph = &g;
        if (weighting) {
            if (weighting->vertex_count() != g.vertex_count())
                throw Error("weights file vertex count does not match input graph");
            for (const auto& [u, v] : weighting->edges())
                if (!g.has_edge(u, v))
                    throw Error("weights file has an entry off the input edge set");
            bound_graph = &*weighting;
        }
        if (!report.edgeless && bound_graph->edge_count() > 0) {
            const Spectrum s = extreme_eigenpairs(*bound_graph);
            report.lambda_1 = s.lambda_1;
            report.lambda_n = s.lambda_n;
        }
        report.hoffman = bound_graph->edge_count() == 0 ? 1.0 : hoffman_bound(*bound_graph);
        if (opt.alpha) report.covering = {{*opt.alpha, covering_bound(g, *opt.alpha)}};
        if (opt.lambda) report.clustering = {{*opt.lambda, clustering_bound(g, *opt.lambda)}};
        if (opt.improve_iterations > 0 && g.edge_count() > 0) {
            const WeightSearchResult ws =
                improve_weight_bound(g, opt.improve_iterations, opt.improve_seed);
            report.weight_bound = {{weighting_digest(ws.weights), ws.value}};
        }
        out << bound_report_to_json(report).dump() << "\n";
    }
    return input.errors.empty() ? 0 : 1;
}

struct ExactOptions {
    std::string input = "-";
    std::string format = "graph6";
    bool chi = false;
    bool chiv = false;
    std::optional<double> clustering_lambda;
    std::optional<std::pair<std::string, std::string>> covering; // (psi, alpha)
    std::string out_dir = "certs";
    std::uint64_t seed = 0;
    int vc_restarts = 6;
};

namespace detail {

inline std::string sanitize_id(const std::string& id) {
    std::string out;
    for (const char c : id)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') ? c : '_';
    return out;
}

} // namespace detail

// Exact/numeric parameter computations with certificates written beside a
// JSON summary stream. Every certificate is re-verified before emission;
// cap overruns become skipped records.
inline int run_exact(const ExactOptions& opt, std::istream& in, std::ostream& out) {
    LoadedInput input;
    if (opt.input == "-")
        input = load_graphs(in, opt.format, "-");
    else
        input = load_graphs_from_path(opt.input, opt.format);
    for (const auto& err : input.errors) {
        Json j;
        j["v"] = kSchemaVersion;
        j["type"] = "error";
        j["id"] = err.id;
        j["line"] = err.line;
        j["message"] = err.message;
        out << j.dump() << "\n";
    }
    std::filesystem::create_directories(opt.out_dir);
    int failures = input.errors.empty() ? 0 : 1;
    for (const auto& [id, g] : input.graphs) {
        const std::string stem = (std::filesystem::path(opt.out_dir) / detail::sanitize_id(id)).string();
        auto emit = [&](const std::string& parameter, double value, const std::string& cert_path,
                        const std::string& status = "ok", const std::string& reason = "") {
            Json j;
            j["v"] = kSchemaVersion;
            j["type"] = "exact";
            j["id"] = id;
            j["parameter"] = parameter;
            j["status"] = status;
            if (status == "ok") j["value"] = value;
            if (!reason.empty()) j["reason"] = reason;
            if (!cert_path.empty()) j["certificate"] = cert_path;
            out << j.dump() << "\n";
        };
        auto write_file = [](const std::string& path, const std::string& content) {
            std::ofstream f(path, std::ios::binary);
            if (!f) throw Error("cannot write certificate file: " + path);
            f << content;
        };
        if (opt.chi) {
            try {
                const ChromaticResult res = chromatic_number(g);
                if (!is_proper(g, res.witness.color))
                    throw Error("internal: coloring certificate failed re-verification");
                const std::string path = stem + ".coloring.json";
                write_file(path, coloring_to_json(res.witness).dump(2) + "\n");
                emit("chi", res.chromatic_number, path);
            } catch (const CapExceeded& e) {
                emit("chi", 0.0, "", "skipped", e.what());
            }
        }
        if (opt.chiv) {
            const VectorColoringResult res = solve_vector_chromatic(
                g, -1, opt.vc_restarts, derive_stream(opt.seed, 0x6368ULL, 0));
            const auto check = verify_vector_coloring(g, res.assignment, res.k_upper, 1e-7);
            if (!check.pass)
                throw Error("internal: vector coloring certificate failed re-verification");
            const std::string path = stem + ".vectors.tsv";
            write_file(path, configuration_to_tsv(res.assignment));
            Json j;
            j["v"] = kSchemaVersion;
            j["type"] = "exact";
            j["id"] = id;
            j["parameter"] = "chiv";
            j["status"] = "ok";
            j["k_upper"] = res.k_upper;
            j["k_lower"] = res.k_lower;
            j["max_edge_ip"] = res.max_edge_ip;
            j["certificate"] = path;
            out << j.dump() << "\n";
        }
        if (opt.clustering_lambda) {
            try {
                const auto res = clustering_number_exact(g, *opt.clustering_lambda);
                if (!res.feasible) {
                    emit("clustering", 0.0, "", "skipped", "infeasible lambda");
                } else {
                    for (const double l1 : res.witness.cluster_lambda_1)
                        if (l1 > *opt.clustering_lambda + 1e-9)
                            throw Error("internal: clustering certificate failed re-verification");
                    const std::string path = stem + ".clustering.json";
                    write_file(path, clustering_to_json(res.witness, *opt.clustering_lambda).dump(2) + "\n");
                    emit("clustering", res.k, path);
                }
            } catch (const CapExceeded& e) {
                emit("clustering", 0.0, "", "skipped", e.what());
            }
        }
        if (opt.covering) {
            try {
                const PsiKind psi = parse_psi_kind(opt.covering->first);
                const Rational alpha = parse_rational(opt.covering->second);
                const auto res = covering_number_exact(g, psi, alpha);
                const FamilyCheck check = verify_cover_family(g, res.family, psi, alpha);
                if (!check.pass)
                    throw Error("internal: covering certificate failed re-verification");
                const std::string path = stem + ".cover_family.json";
                write_file(path, cover_family_to_json(res.family).dump(2) + "\n");
                emit("covering", res.k, path);
            } catch (const CapExceeded& e) {
                emit("covering", 0.0, "", "skipped", e.what());
            }
        }
    }
    return failures;
}

struct VerifyCliOptions {
    std::string corpus = "default"; // "default" or a path
    VerifyOptions options;
};

inline int run_verify(const VerifyCliOptions& opt, std::ostream& out) {
    std::vector<CorpusItem> corpus;
    if (opt.corpus == "default") {
        corpus = default_corpus();
    } else {
        std::ifstream in(opt.corpus);
        if (!in) throw Error("cannot open corpus file: " + opt.corpus);
        corpus = load_corpus(in);
    }
    const auto records = run_verification(corpus, opt.options);
    out << records_to_jsonl(records);
    return any_violated(records) ? 1 : 0;
}

struct SimulateOptions {
    std::string graph_path;
    std::string format = "graph6";
    std::string family_path;
    long long trials = 10000;
    std::uint64_t seed = 0;
    std::string histogram_csv; // optional output path
};

// Monte-Carlo statistics plus the derandomized assignment for a family
// loaded from a certificate file. The family must pass verification; a
// failing family aborts with the violation list.
inline int run_simulate(const SimulateOptions& opt, std::ostream& out) {
    LoadedInput input = load_graphs_from_path(opt.graph_path, opt.format);
    if (!input.errors.empty())
        throw Error("graph input error: " + input.errors.front().message);
    if (input.graphs.size() != 1)
        throw Error("simulate expects exactly one graph, got " +
                    std::to_string(input.graphs.size()));
    const WeightedGraph& g = input.graphs.front().graph;

    std::ifstream ff(opt.family_path);
    if (!ff) throw Error("cannot open family file: " + opt.family_path);
    CoverFamily family;
    try {
        family = cover_family_from_json(Json::parse(ff));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad family JSON: ") + e.what());
    }
    // Recompute psi values from scratch before use.
    family.psi_values.clear();
    for (const auto& subset : family.subsets)
        family.psi_values.push_back(psi_value(family.psi, g, subset));
    const FamilyCheck check = verify_cover_family(g, family, family.psi, family.alpha, family.mode);
    if (!check.pass) {
        std::string msg = "family failed verification:";
        for (const auto& v : check.violations) msg += "\n  " + v;
        throw Error(msg);
    }

    const SimulationStats sim = simulate(g, family, opt.trials, opt.seed);
    out << simulation_to_json(sim).dump() << "\n";
    const RoundingOutcome outcome = derandomize(g, family);
    Json j;
    j["v"] = kSchemaVersion;
    j["type"] = "derandomized";
    j["choice"] = outcome.choice;
    j["bad_edges"] = outcome.bad_edges;
    j["expectation_floor"] = sim.expectation_exact.floor();
    out << j.dump() << "\n";
    if (!opt.histogram_csv.empty()) {
        std::ofstream hf(opt.histogram_csv, std::ios::binary);
        if (!hf) throw Error("cannot write histogram file: " + opt.histogram_csv);
        hf << histogram_to_csv(sim);
    }
    return 0;
}

struct GenOptions {
    std::string family;
    int n = 0;
    int d = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    int max_n = 5; // for family == "enumerate"
};

// Emits graphs in graph6, one per line. "enumerate" lists one
// representative per isomorphism class for every order up to max_n.
inline int run_gen(const GenOptions& opt, std::ostream& out) {
    if (opt.family == "complete") {
        out << emit_graph6(make_complete(opt.n)) << "\n";
    } else if (opt.family == "cycle") {
        out << emit_graph6(make_cycle(opt.n)) << "\n";
    } else if (opt.family == "petersen") {
        out << emit_graph6(make_petersen()) << "\n";
    } else if (opt.family == "complete_bipartite") {
        out << emit_graph6(make_complete_bipartite(opt.n, opt.d)) << "\n";
    } else if (opt.family == "random_regular") {
        out << emit_graph6(make_random_regular(opt.n, opt.d, opt.seed)) << "\n";
    } else if (opt.family == "erdos_renyi") {
        out << emit_graph6(make_erdos_renyi(opt.n, opt.p, opt.seed)) << "\n";
    } else if (opt.family == "enumerate") {
        for (int n = 1; n <= opt.max_n; ++n)
            for (const auto& g : enumerate_graphs(n)) out << emit_graph6(g) << "\n";
    } else {
        throw Error("unknown generator family '" + opt.family + "'");
    }
    return 0;
}

} // namespace hoffman::cli
