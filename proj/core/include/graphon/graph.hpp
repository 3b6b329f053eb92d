#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "graphon/matrix.hpp"

namespace graphon {

using VertexId = std::uint32_t;
using VertexList = std::vector<VertexId>;

/// Simple undirected graph on n vertices with a dense bit-matrix adjacency.
/// Symmetry and the empty diagonal are enforced by construction; once built,
/// a Graph is treated as immutable and can be shared across threads.
class Graph {
public:
    explicit Graph(std::size_t n);

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return stride_; }

    bool has_edge(std::size_t i, std::size_t j) const;

    /// Adds the undirected edge {i,j}. Self-loops and out-of-range endpoints
    /// are rejected.
    void add_edge(std::size_t i, std::size_t j);

    std::size_t degree(std::size_t i) const;

    /// Number of undirected edges.
    std::size_t edge_total() const;

    std::span<const std::uint64_t> row(std::size_t i) const {
        return {bits_.data() + i * stride_, stride_};
    }

    bool operator==(const Graph& other) const = default;

private:
    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Weighted graph on k nodes: vertex weights normalized to sum 1 and a
/// symmetric edge-weight matrix with entries in [0,1]. Validated on
/// construction.
struct WeightedGraph {
    std::vector<double> vertex_weights;
    Matrix edge_weights;

    WeightedGraph(std::vector<double> vertex_weights_in, Matrix edge_weights_in);

    std::size_t size() const { return vertex_weights.size(); }
};

/// Partition of the vertex set [n] into k classes, every class non-empty.
class Partition {
public:
    Partition(std::vector<std::uint32_t> assignment, std::size_t k);

    static Partition trivial(std::size_t n);
    static Partition discrete(std::size_t n);

    std::size_t size() const { return assignment_.size(); }
    std::size_t class_count() const { return k_; }
    std::uint32_t class_of(std::size_t v) const { return assignment_[v]; }
    std::span<const std::uint32_t> assignment() const { return assignment_; }

    std::vector<std::size_t> class_sizes() const;

    /// Classes materialized as ascending vertex-index lists.
    std::vector<VertexList> classes() const;

    bool operator==(const Partition& other) const = default;

private:
    std::vector<std::uint32_t> assignment_;
    std::size_t k_ = 0;
};

/// Per-class weighted edge densities of a single vertex: entry j is
/// (|P_j|/n) * e_G({x}, P_j), which reduces to c_G({x}, P_j)/n.
using DensityVector = std::vector<double>;

/// c_G(X,Y): number of ordered pairs (i,j) in X x Y joined by an edge. An
/// edge with both endpoints in X and Y contributes once per orientation, so
/// X == Y counts each internal edge twice.
std::uint64_t edge_count(const Graph& g, std::span<const VertexId> xs,
                         std::span<const VertexId> ys);

/// e_G(X,Y) = c_G(X,Y) / (|X| |Y|); empty X or Y is an error.
double edge_density(const Graph& g, std::span<const VertexId> xs,
                    std::span<const VertexId> ys);

/// Quotient graph G/P: vertex weights |P_i|/n, edge weights e_G(P_i, P_j).
WeightedGraph quotient(const Graph& g, const Partition& p);

DensityVector density_vector(const Graph& g, const Partition& p, std::size_t vertex);

double l1_distance(const DensityVector& a, const DensityVector& b);

/// One bit-mask per class, in the Graph's row layout, for popcount kernels.
std::vector<std::vector<std::uint64_t>> class_masks(const Graph& g, const Partition& p);

/// Density vectors of every vertex stacked into an n x k matrix.
Matrix all_density_vectors(const Graph& g, const Partition& p);

}  // namespace graphon
