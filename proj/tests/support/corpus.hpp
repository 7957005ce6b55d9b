#pragma once

#include "fairdom/graph.hpp"

#include <random>
#include <vector>

namespace corpus {

// G(n, p) samples with n drawn from [lo, hi] and p alternating between the given values.
inline std::vector<fairdom::Graph> random_graphs(int count, int lo, int hi, std::vector<double> probs,
                                                 unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> order(lo, hi);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<fairdom::Graph> out;
    for (int i = 0; i < count; ++i) {
        const int n = order(rng);
        const double p = probs[static_cast<std::size_t>(i) % probs.size()];
        std::vector<fairdom::Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) edges.push_back({u, v});
        out.emplace_back(n, edges);
    }
    return out;
}

}  // namespace corpus
