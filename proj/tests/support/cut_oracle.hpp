#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "graphon/graph.hpp"

namespace graphon::testing {

/// Naive exact cut metric: enumerate every (S,T) pair of vertex subsets and
/// take the largest |c_F(S,T) - c_G(S,T)| / n^2. Kept independent of the
/// library's greedy-column implementation; usable up to n ~ 12.
inline double naive_cut_metric(const Graph& f, const Graph& g) {
    const std::size_t n = f.size();
    std::vector<std::int64_t> delta(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            delta[i * n + j] = (f.has_edge(i, j) ? 1 : 0) - (g.has_edge(i, j) ? 1 : 0);

    const std::uint32_t subsets = std::uint32_t{1} << n;
    std::int64_t best = 0;
    std::vector<std::int64_t> col(n, 0);
    for (std::uint32_t s = 0; s < subsets; ++s) {
        std::fill(col.begin(), col.end(), 0);
        for (std::size_t i = 0; i < n; ++i)
            if ((s >> i) & 1u)
                for (std::size_t j = 0; j < n; ++j) col[j] += delta[i * n + j];
        for (std::uint32_t t = 0; t < subsets; ++t) {
            std::int64_t sum = 0;
            for (std::size_t j = 0; j < n; ++j)
                if ((t >> j) & 1u) sum += col[j];
            best = std::max(best, sum < 0 ? -sum : sum);
        }
    }
    return static_cast<double>(best) / (static_cast<double>(n) * static_cast<double>(n));
}

}  // namespace graphon::testing
