#include "graphon/edgelist.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "graphon/random.hpp"

namespace graphon {

Graph ingest_edge_list(std::istream& in) {
    std::unordered_map<std::uint64_t, std::uint32_t> id_of;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    auto intern = [&](std::uint64_t raw) {
        const auto [it, inserted] = id_of.emplace(raw, static_cast<std::uint32_t>(id_of.size()));
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    auto malformed = [&]() {
        return std::runtime_error("edge list line " + std::to_string(line_no) +
                                  ": expected two nonnegative integers");
    };
    auto parse_id = [&](const std::string& token) {
        if (token.empty() ||
            !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw malformed();
        try {
            return std::stoull(token);
        } catch (const std::out_of_range&) {
            throw malformed();
        }
    };
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream tokens(line);
        std::string ta, tb, extra;
        if (!(tokens >> ta >> tb) || (tokens >> extra)) throw malformed();
        const std::uint32_t u = intern(parse_id(ta));
        const std::uint32_t v = intern(parse_id(tb));
        if (u != v) edges.emplace_back(u, v);
    }
    if (id_of.empty()) throw std::runtime_error("edge list: no vertices found");

    Graph g(id_of.size());
    for (const auto& [u, v] : edges) g.add_edge(u, v);  // dedup is free on a bit matrix
    return g;
}

Graph ingest_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    return ingest_edge_list(in);
}

Graph top_k_subgraph(const Graph& g, std::size_t K) {
    const std::size_t n = g.size();
    if (K == 0 || K > n)
        throw std::invalid_argument("top_k_subgraph: K must lie in [1, vertex count]");
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return g.degree(a) > g.degree(b); });
    std::vector<std::uint32_t> keep(order.begin(), order.begin() + K);
    std::sort(keep.begin(), keep.end());  // preserve original relative order

    Graph sub(K);
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = i + 1; j < K; ++j)
            if (g.has_edge(keep[i], keep[j])) sub.add_edge(i, j);
    return sub;
}

Graph shuffle_vertices(const Graph& g, std::uint64_t seed) {
    const std::size_t n = g.size();
    RandomStream rng(seed);
    std::vector<std::uint32_t> label(n);
    std::iota(label.begin(), label.end(), 0u);
    for (std::size_t t = 0; t + 1 < n; ++t) {
        const std::size_t j = t + rng.uniform_index(n - t);
        std::swap(label[t], label[j]);
    }
    Graph shuffled(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) shuffled.add_edge(label[i], label[j]);
    return shuffled;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    const std::size_t n = g.size();
    out << "# vertices " << n << "\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) out << i << " " << j << "\n";
}

}  // namespace graphon
