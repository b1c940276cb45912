#pragma once

#include <cctype>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "hoffman/errors.hpp"
#include "hoffman/graph.hpp"

namespace hoffman {

namespace g6 {
constexpr int kBias = 63;           // printable offset
constexpr std::int64_t kMaxN = 1 << 18;
} // namespace g6

// Decodes one graph6 line (McKay's format: size header, then the upper
// triangle packed column by column into 6-bit printable groups).
inline WeightedGraph parse_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw ParseError("empty graph6 string");
    for (const char c : s)
        if (c < 63 || c > 126)
            throw ParseError("graph6 character out of range 63..126");

    std::size_t pos = 0;
    std::int64_t n = 0;
    if (s[0] != 126) {
        n = s[0] - g6::kBias;
        pos = 1;
    } else if (s.size() >= 2 && s[1] != 126) {
        if (s.size() < 4) throw ParseError("malformed graph6 length header");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[static_cast<std::size_t>(i)] - g6::kBias);
        pos = 4;
    } else {
        if (s.size() < 8) throw ParseError("malformed graph6 length header");
        n = 0;
        for (int i = 2; i <= 7; ++i) n = (n << 6) | (s[static_cast<std::size_t>(i)] - g6::kBias);
        pos = 8;
    }
    if (n < 0 || n > g6::kMaxN) throw ParseError("graph6 vertex count out of supported range");

    const std::int64_t nbits = n * (n - 1) / 2;
    const std::int64_t ngroups = (nbits + 5) / 6;
    if (static_cast<std::int64_t>(s.size() - pos) != ngroups)
        throw ParseError("malformed graph6 length header: body has " +
                         std::to_string(s.size() - pos) + " groups, expected " +
                         std::to_string(ngroups));

    std::vector<WeightedGraph::Edge> edges;
    std::int64_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int group = s[pos + static_cast<std::size_t>(bit / 6)] - g6::kBias;
            if (group & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
        }
    }
    // Padding bits must be zero.
    for (std::int64_t b = nbits; b < ngroups * 6; ++b) {
        const int group = s[pos + static_cast<std::size_t>(b / 6)] - g6::kBias;
        if (group & (1 << (5 - b % 6))) throw ParseError("graph6 trailing bits nonzero");
    }
    return WeightedGraph::simple(static_cast<int>(n), std::move(edges));
}

// Canonical graph6 line for a unit-weight graph.
inline std::string emit_graph6(const WeightedGraph& g) {
    if (g.is_weighted() && !g.unit_weights())
        throw Error("graph6 cannot carry weights");
    const std::int64_t n = g.vertex_count();
    if (n > g6::kMaxN) throw Error("graph too large for graph6 emitter");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + g6::kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + g6::kBias));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + g6::kBias));
    }
    const std::int64_t nbits = n * (n - 1) / 2;
    std::vector<bool> bits(static_cast<std::size_t>(nbits), false);
    for (const auto& [i, j] : g.edges())
        bits[static_cast<std::size_t>(static_cast<std::int64_t>(j) * (j - 1) / 2 + i)] = true;
    for (std::int64_t b = 0; b < nbits; b += 6) {
        int group = 0;
        for (int k = 0; k < 6 && b + k < nbits; ++k)
            if (bits[static_cast<std::size_t>(b + k)]) group |= 1 << (5 - k);
        out.push_back(static_cast<char>(group + g6::kBias));
    }
    return out;
}

// DIMACS .col: "c" comments, one "p edge <n> <m>" line, "e <u> <v>" lines
// with 1-based endpoints (shifted to 0-based here). Anything else is
// rejected loudly.
inline WeightedGraph parse_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long long expected_m = -1;
    std::vector<WeightedGraph::Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> expected_m) || (fmt != "edge" && fmt != "edges" && fmt != "col"))
                throw ParseError("line " + std::to_string(lineno) + ": unsupported DIMACS problem line");
            continue;
        }
        if (tag == "e") {
            if (n < 0) throw ParseError("line " + std::to_string(lineno) + ": edge before problem line");
            int u, v;
            if (!(ls >> u >> v))
                throw ParseError("line " + std::to_string(lineno) + ": malformed edge line");
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("line " + std::to_string(lineno) + ": endpoint out of range");
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw ParseError("line " + std::to_string(lineno) + ": unsupported DIMACS record '" + tag + "'");
    }
    if (n < 0) throw ParseError("missing DIMACS problem line");
    if (expected_m >= 0 && expected_m != static_cast<long long>(edges.size()))
        throw ParseError("DIMACS edge count mismatch: header says " + std::to_string(expected_m) +
                         ", file has " + std::to_string(edges.size()));
    try {
        return WeightedGraph::simple(n, std::move(edges));
    } catch (const Error& e) {
        throw ParseError(e.what()); // loops/duplicates surface here
    }
}

// Weighted edge list: header "n <count>", then lines "i j w" with 0-based
// ids. Blank lines and '#' comments are skipped. Duplicate edges in either
// orientation are an error.
inline WeightedGraph parse_weighted_edgelist(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<WeightedGraph::Edge> edges;
    std::vector<double> weights;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first[0] == '#') continue;
        if (n < 0) {
            int count;
            if (first != "n" || !(ls >> count) || count < 0)
                throw ParseError("line " + std::to_string(lineno) + ": expected header 'n <count>'");
            n = count;
            continue;
        }
        int i, j;
        std::string wtext;
        try {
            i = std::stoi(first);
        } catch (const std::logic_error&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad vertex id '" + first + "'");
        }
        if (!(ls >> j >> wtext))
            throw ParseError("line " + std::to_string(lineno) + ": expected 'i j w'");
        std::size_t used = 0;
        double w = 0.0;
        try {
            w = std::stod(wtext, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used != wtext.size())
            throw ParseError("line " + std::to_string(lineno) + ": non-numeric weight '" + wtext + "'");
        if (i == j) throw ParseError("line " + std::to_string(lineno) + ": self-loop");
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw ParseError("line " + std::to_string(lineno) + ": vertex id out of range");
        edges.emplace_back(std::min(i, j), std::max(i, j));
        weights.push_back(w);
    }
    if (n < 0) throw ParseError("missing edge-list header 'n <count>'");
    try {
        return WeightedGraph::weighted(n, std::move(edges), std::move(weights));
    } catch (const Error& e) {
        throw ParseError(e.what()); // duplicate edges surface here
    }
}

inline std::string emit_weighted_edgelist(const WeightedGraph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    char buf[64];
    for (int e = 0; e < g.edge_count(); ++e) {
        std::snprintf(buf, sizeof(buf), "%d\t%d\t%.17g", g.edges()[static_cast<std::size_t>(e)].first,
                      g.edges()[static_cast<std::size_t>(e)].second, g.weight(e));
        out << buf << "\n";
    }
    return out.str();
}

} // namespace hoffman
