#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hoffman/bounds.hpp"
#include "hoffman/clustering.hpp"
#include "hoffman/coloring.hpp"
#include "hoffman/cover_family.hpp"
#include "hoffman/errors.hpp"
#include "hoffman/rational.hpp"
#include "hoffman/rounding.hpp"

namespace hoffman {

// All machine-readable output uses ordered JSON with a schema version
// field, so byte-for-byte reproducibility only depends on the values.
using Json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "v1";

inline Json coloring_to_json(const Coloring& coloring) {
    Json j;
    j["v"] = kSchemaVersion;
    j["type"] = "coloring";
    j["k"] = coloring.k;
    j["colors"] = coloring.color;
    return j;
}

inline Coloring coloring_from_json(const Json& j) {
    if (j.value("type", "") != "coloring") throw ParseError("not a coloring certificate");
    Coloring c;
    c.k = j.at("k").get<int>();
    c.color = j.at("colors").get<std::vector<int>>();
    return c;
}

inline Json clustering_to_json(const Clustering& clustering, double lambda) {
    Json j;
    j["v"] = kSchemaVersion;
    j["type"] = "clustering";
    j["lambda"] = lambda;
    j["k"] = clustering.k;
    j["assignment"] = clustering.assignment;
    j["cluster_lambda_1"] = clustering.cluster_lambda_1;
    return j;
}

inline Json edge_cover_to_json(const EdgeCover& cover) {
    Json j;
    j["owner"] = cover.owner;
    j["max_load"] = cover.max_load;
    return j;
}

inline EdgeCover edge_cover_from_json(const Json& j) {
    EdgeCover cover;
    cover.owner = j.at("owner").get<std::vector<int>>();
    cover.max_load = j.value("max_load", 0);
    return cover;
}

inline Json cover_family_to_json(const CoverFamily& family) {
    Json j;
    j["v"] = kSchemaVersion;
    j["type"] = "cover_family";
    j["psi"] = to_string(family.psi);
    j["alpha"] = family.alpha.str();
    j["mode"] = to_string(family.mode);
    j["subsets"] = family.subsets;
    j["psi_values"] = family.psi_values;
    Json masses = Json::array();
    for (const auto& m : family.vertex_mass) masses.push_back(m.str());
    j["vertex_mass"] = masses;
    Json covers = Json::array();
    for (const auto& c : family.covers) covers.push_back(edge_cover_to_json(c));
    j["covers"] = covers;
    return j;
}

inline CoverFamily cover_family_from_json(const Json& j) {
    if (j.value("type", "") != "cover_family") throw ParseError("not a cover-family certificate");
    CoverFamily family;
    family.psi = parse_psi_kind(j.at("psi").get<std::string>());
    family.alpha = parse_rational(j.at("alpha").get<std::string>());
    family.mode = parse_budget_mode(j.value("mode", "per_subset"));
    family.subsets = j.at("subsets").get<std::vector<std::vector<int>>>();
    family.psi_values = j.value("psi_values", std::vector<int>{});
    if (j.contains("covers"))
        for (const auto& c : j.at("covers")) family.covers.push_back(edge_cover_from_json(c));
    return family;
}

inline Json simulation_to_json(const SimulationStats& stats) {
    Json j;
    j["v"] = kSchemaVersion;
    j["type"] = "rounding_stats";
    j["trials"] = stats.trials;
    j["mean_bad_edges"] = stats.mean;
    j["standard_error"] = stats.standard_error;
    j["expectation_exact"] = stats.expectation_exact.str();
    if (stats.expectation_cover)
        j["expectation_cover"] = stats.expectation_cover->str();
    Json hist = Json::array();
    for (const auto& [count, freq] : stats.histogram)
        hist.push_back(Json{{"bad_edges", count}, {"trials", freq}});
    j["histogram"] = hist;
    return j;
}

inline std::string histogram_to_csv(const SimulationStats& stats) {
    std::string out = "bad_edges,trials\n";
    for (const auto& [count, freq] : stats.histogram)
        out += std::to_string(count) + "," + std::to_string(freq) + "\n";
    return out;
}

inline Json bound_report_to_json(const BoundReport& report) {
    Json j;
    j["v"] = kSchemaVersion;
    j["type"] = "bounds";
    j["id"] = report.graph_id;
    j["n"] = report.n;
    j["m"] = report.m;
    j["avg_degree"] = report.avg_degree;
    if (report.edgeless) {
        j["edgeless"] = true;
    } else {
        j["lambda_1"] = report.lambda_1;
        j["lambda_n"] = report.lambda_n;
    }
    j["hoffman"] = report.hoffman;
    j["hoffman_ceil"] = static_cast<long long>(std::ceil(report.hoffman - 1e-9));
    if (report.covering)
        j["covering"] = Json{{"alpha", report.covering->first},
                             {"value", report.covering->second},
                             {"ceil", static_cast<long long>(std::ceil(report.covering->second - 1e-9))}};
    if (report.clustering)
        j["clustering"] = Json{{"lambda", report.clustering->first},
                               {"value", report.clustering->second},
                               {"ceil", static_cast<long long>(std::ceil(report.clustering->second - 1e-9))}};
    if (report.weight_bound)
        j["weight_bound"] = Json{{"digest", report.weight_bound->first}, {"value", report.weight_bound->second}};
    return j;
}

// Short FNV-1a digest of a weighting, for weight_bound provenance lines.
inline std::string weighting_digest(const WeightedGraph& g) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](const std::string& s) {
        for (const char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ULL;
        }
    };
    char buf[64];
    for (int e = 0; e < g.edge_count(); ++e) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%.17g;", g.edges()[static_cast<std::size_t>(e)].first,
                      g.edges()[static_cast<std::size_t>(e)].second, g.weight(e));
        mix(buf);
    }
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace hoffman
