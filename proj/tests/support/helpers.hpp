#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "graphon/graph.hpp"

namespace graphon::testing {

inline Graph make_graph(std::size_t n,
                        std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
    Graph g(n);
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    return g;
}

/// Partition from explicit class lists, class index = list position.
inline Partition make_partition(std::size_t n,
                                std::initializer_list<std::initializer_list<std::size_t>> parts) {
    std::vector<std::uint32_t> assignment(n, 0);
    std::uint32_t c = 0;
    std::size_t k = 0;
    for (const auto& part : parts) {
        for (std::size_t v : part) assignment[v] = c;
        ++c;
        ++k;
    }
    return Partition(std::move(assignment), k);
}

inline const Graph& path4() {
    static const Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    return g;
}

}  // namespace graphon::testing
