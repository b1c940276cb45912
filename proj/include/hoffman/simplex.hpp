#pragma once

#include <cmath>
#include <vector>

#include "hoffman/errors.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman {

// k unit vectors in dimension k-1 with pairwise inner products -1/(k-1):
// the vertices of a regular simplex centered at the origin.
struct SimplexFrame {
    int k = 0;
    std::vector<std::vector<double>> vectors;
};

// Explicit construction: scaled coordinate offsets sqrt(k/(k-1)) (e_i - 1/k)
// live in the zero-sum hyperplane of R^k; expressing them in the Helmert
// orthonormal basis of that hyperplane drops them to dimension k-1.
inline SimplexFrame simplex_frame(int k) {
    if (k < 2) throw Error("simplex frame needs k >= 2");
    SimplexFrame frame;
    frame.k = k;
    // Helmert basis rows h_j = (1,...,1,-j,0,...,0)/sqrt(j(j+1)), j=1..k-1.
    std::vector<std::vector<double>> helmert(static_cast<std::size_t>(k - 1),
                                             std::vector<double>(static_cast<std::size_t>(k), 0.0));
    for (int j = 1; j < k; ++j) {
        const double scale = 1.0 / std::sqrt(static_cast<double>(j) * (j + 1));
        for (int i = 0; i < j; ++i) helmert[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)] = scale;
        helmert[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(j)] = -scale * j;
    }
    const double lift = std::sqrt(static_cast<double>(k) / (k - 1));
    frame.vectors.assign(static_cast<std::size_t>(k), std::vector<double>(static_cast<std::size_t>(k - 1), 0.0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k - 1; ++j) {
            // <lift * (e_i - 1/k), h_j>
            double ip = helmert[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            double mean = 0.0;
            for (int t = 0; t < k; ++t) mean += helmert[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
            ip -= mean / k;
            frame.vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lift * ip;
        }
    }
    return frame;
}

// Attaches frame vector u_{choice[v]} to every vertex.
inline GramConfiguration configuration_from_choices(const std::vector<int>& choices, int k) {
    const SimplexFrame frame = simplex_frame(k);
    GramConfiguration cfg;
    cfg.vectors.reserve(choices.size());
    for (const int c : choices) {
        if (c < 0 || c >= k) throw Error("choice index out of range");
        cfg.vectors.push_back(frame.vectors[static_cast<std::size_t>(c)]);
    }
    return cfg;
}

} // namespace hoffman
