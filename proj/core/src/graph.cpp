#include "graphon/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace graphon {

namespace {

constexpr double kWeightSumTolerance = 1e-12;

std::uint64_t intersect_popcount(std::span<const std::uint64_t> a,
                                 std::span<const std::uint64_t> b) {
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] & b[w]);
    return total;
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {
    if (n == 0) throw std::invalid_argument("Graph: vertex count must be positive");
}

bool Graph::has_edge(std::size_t i, std::size_t j) const {
    return (bits_[i * stride_ + j / 64] >> (j % 64)) & 1u;
}

void Graph::add_edge(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) throw std::out_of_range("add_edge: vertex index out of range");
    if (i == j) throw std::invalid_argument("add_edge: self-loops are not allowed");
    bits_[i * stride_ + j / 64] |= std::uint64_t{1} << (j % 64);
    bits_[j * stride_ + i / 64] |= std::uint64_t{1} << (i % 64);
}

std::size_t Graph::degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::uint64_t w : row(i)) d += std::popcount(w);
    return d;
}

std::size_t Graph::edge_total() const {
    std::size_t ordered = 0;
    for (std::size_t i = 0; i < n_; ++i) ordered += degree(i);
    return ordered / 2;
}

WeightedGraph::WeightedGraph(std::vector<double> vertex_weights_in, Matrix edge_weights_in)
    : vertex_weights(std::move(vertex_weights_in)), edge_weights(std::move(edge_weights_in)) {
    const std::size_t k = vertex_weights.size();
    if (k == 0) throw std::invalid_argument("WeightedGraph: node count must be positive");
    if (edge_weights.rows() != k || edge_weights.cols() != k)
        throw std::invalid_argument("WeightedGraph: edge weight matrix must be k x k");
    double sum = 0.0;
    for (double w : vertex_weights) {
        if (!(w >= 0.0)) throw std::invalid_argument("WeightedGraph: vertex weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTolerance)
        throw std::invalid_argument("WeightedGraph: vertex weights must sum to 1");
    if (!edge_weights.values_in_unit_interval())
        throw std::invalid_argument("WeightedGraph: edge weights must lie in [0,1]");
    if (!edge_weights.is_symmetric())
        throw std::invalid_argument("WeightedGraph: edge weights must be symmetric");
}

Partition::Partition(std::vector<std::uint32_t> assignment, std::size_t k)
    : assignment_(std::move(assignment)), k_(k) {
    if (assignment_.empty()) throw std::invalid_argument("Partition: vertex count must be positive");
    if (k_ == 0) throw std::invalid_argument("Partition: class count must be positive");
    std::vector<bool> seen(k_, false);
    for (std::uint32_t c : assignment_) {
        if (c >= k_) throw std::invalid_argument("Partition: class index out of range");
        seen[c] = true;
    }
    for (std::size_t c = 0; c < k_; ++c)
        if (!seen[c])
            throw std::invalid_argument("Partition: class " + std::to_string(c) + " is empty");
}

Partition Partition::trivial(std::size_t n) {
    return Partition(std::vector<std::uint32_t>(n, 0), 1);
}

Partition Partition::discrete(std::size_t n) {
    std::vector<std::uint32_t> assignment(n);
    std::iota(assignment.begin(), assignment.end(), 0u);
    return Partition(std::move(assignment), n);
}

std::vector<std::size_t> Partition::class_sizes() const {
    std::vector<std::size_t> sizes(k_, 0);
    for (std::uint32_t c : assignment_) ++sizes[c];
    return sizes;
}

std::vector<VertexList> Partition::classes() const {
    std::vector<VertexList> out(k_);
    const auto sizes = class_sizes();
    for (std::size_t c = 0; c < k_; ++c) out[c].reserve(sizes[c]);
    for (std::size_t v = 0; v < assignment_.size(); ++v)
        out[assignment_[v]].push_back(static_cast<VertexId>(v));
    return out;
}

std::uint64_t edge_count(const Graph& g, std::span<const VertexId> xs,
                         std::span<const VertexId> ys) {
    const std::size_t n = g.size();
    std::vector<std::uint64_t> mask(g.words_per_row(), 0);
    for (VertexId v : ys) {
        if (v >= n) throw std::out_of_range("edge_count: vertex index out of range");
        mask[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    std::uint64_t total = 0;
    for (VertexId v : xs) {
        if (v >= n) throw std::out_of_range("edge_count: vertex index out of range");
        total += intersect_popcount(g.row(v), mask);
    }
    return total;
}

double edge_density(const Graph& g, std::span<const VertexId> xs,
                    std::span<const VertexId> ys) {
    if (xs.empty() || ys.empty())
        throw std::invalid_argument("edge_density: vertex sets must be non-empty");
    const double pairs = static_cast<double>(xs.size()) * static_cast<double>(ys.size());
    return static_cast<double>(edge_count(g, xs, ys)) / pairs;
}

WeightedGraph quotient(const Graph& g, const Partition& p) {
    if (p.size() != g.size()) throw std::invalid_argument("quotient: partition size mismatch");
    const std::size_t n = g.size();
    const std::size_t k = p.class_count();
    const auto sizes = p.class_sizes();
    const auto masks = class_masks(g, p);

    // Ordered-pair counts between classes, accumulated row by row.
    Matrix counts(k, k, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
        const auto r = g.row(v);
        const std::uint32_t cv = p.class_of(v);
        for (std::size_t c = 0; c < k; ++c)
            counts(cv, c) += static_cast<double>(intersect_popcount(r, masks[c]));
    }

    std::vector<double> weights(k);
    Matrix densities(k, k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        weights[i] = static_cast<double>(sizes[i]) / static_cast<double>(n);
        for (std::size_t j = 0; j < k; ++j)
            densities(i, j) =
                counts(i, j) / (static_cast<double>(sizes[i]) * static_cast<double>(sizes[j]));
    }
    // Exact symmetry, unharmed by accumulation order.
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) densities(j, i) = densities(i, j);
    return WeightedGraph(std::move(weights), std::move(densities));
}

DensityVector density_vector(const Graph& g, const Partition& p, std::size_t vertex) {
    if (vertex >= g.size()) throw std::out_of_range("density_vector: vertex index out of range");
    if (p.size() != g.size())
        throw std::invalid_argument("density_vector: partition size mismatch");
    const auto masks = class_masks(g, p);
    DensityVector out(p.class_count(), 0.0);
    const double n = static_cast<double>(g.size());
    for (std::size_t c = 0; c < p.class_count(); ++c)
        out[c] = static_cast<double>(intersect_popcount(g.row(vertex), masks[c])) / n;
    return out;
}

double l1_distance(const DensityVector& a, const DensityVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("l1_distance: length mismatch");
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) total += std::abs(a[i] - b[i]);
    return total;
}

std::vector<std::vector<std::uint64_t>> class_masks(const Graph& g, const Partition& p) {
    std::vector<std::vector<std::uint64_t>> masks(
        p.class_count(), std::vector<std::uint64_t>(g.words_per_row(), 0));
    for (std::size_t v = 0; v < p.size(); ++v)
        masks[p.class_of(v)][v / 64] |= std::uint64_t{1} << (v % 64);
    return masks;
}

Matrix all_density_vectors(const Graph& g, const Partition& p) {
    if (p.size() != g.size())
        throw std::invalid_argument("all_density_vectors: partition size mismatch");
    const std::size_t n = g.size();
    const std::size_t k = p.class_count();
    const auto masks = class_masks(g, p);
    Matrix out(n, k, 0.0);
    const double dn = static_cast<double>(n);
    for (std::size_t v = 0; v < n; ++v) {
        const auto r = g.row(v);
        for (std::size_t c = 0; c < k; ++c)
            out(v, c) = static_cast<double>(intersect_popcount(r, masks[c])) / dn;
    }
    return out;
}

}  // namespace graphon
