#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "graphon/graph.hpp"

namespace graphon {

/// Reads a whitespace edge list: two nonnegative integer ids per line, '#'
/// lines ignored. Ids are remapped to 0..n-1 by first appearance; self-loops
/// are dropped (their endpoints still count as vertices) and duplicate or
/// reversed edges collapse, so the result is a simple symmetric graph.
/// Malformed lines report their line number; a file yielding no vertices is
/// an error.
Graph ingest_edge_list(std::istream& in);
Graph ingest_edge_list_file(const std::string& path);

/// Induced subgraph on the K highest-degree vertices (ties keep the smaller
/// original index); surviving vertices are renumbered in their original
/// relative order.
Graph top_k_subgraph(const Graph& g, std::size_t K);

/// Relabels vertices by a seeded uniform permutation; the result is
/// isomorphic to the input.
Graph shuffle_vertices(const Graph& g, std::uint64_t seed);

void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace graphon
