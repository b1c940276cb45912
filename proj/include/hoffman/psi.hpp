#pragma once

#include <string>
#include <vector>

#include "hoffman/coloring.hpp"
#include "hoffman/errors.hpp"
#include "hoffman/graph.hpp"

namespace hoffman {

// Graph parameters usable as psi: 1 on edgeless graphs and >= chi
// everywhere. degeneracy+1 and maxdeg+1 are the two structural instances;
// the exact chromatic number is the extreme admissible choice.
enum class PsiKind { degeneracy_plus_1, maxdeg_plus_1, exact_chromatic };

inline std::string to_string(PsiKind kind) {
    switch (kind) {
        case PsiKind::degeneracy_plus_1: return "degeneracy_plus_1";
        case PsiKind::maxdeg_plus_1: return "maxdeg_plus_1";
        case PsiKind::exact_chromatic: return "exact_chromatic";
    }
    return "?";
}

inline PsiKind parse_psi_kind(const std::string& name) {
    if (name == "degeneracy_plus_1") return PsiKind::degeneracy_plus_1;
    if (name == "maxdeg_plus_1") return PsiKind::maxdeg_plus_1;
    if (name == "exact_chromatic") return PsiKind::exact_chromatic;
    throw ParseError("unknown psi parameter '" + name + "'");
}

inline int psi_value(PsiKind kind, const WeightedGraph& g) {
    if (g.edge_count() == 0) return 1;
    switch (kind) {
        case PsiKind::degeneracy_plus_1: return stats(g).degeneracy + 1;
        case PsiKind::maxdeg_plus_1: return stats(g).max_degree + 1;
        case PsiKind::exact_chromatic: return chromatic_number(g).chromatic_number;
    }
    throw Error("unreachable psi kind");
}

// psi evaluated on the subgraph induced by the given vertex subset.
inline int psi_value(PsiKind kind, const WeightedGraph& g, const std::vector<int>& subset) {
    return psi_value(kind, g.induced(subset));
}

} // namespace hoffman
