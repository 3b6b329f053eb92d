#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "graphon/graph.hpp"
#include "graphon/matrix.hpp"
#include "graphon/random.hpp"

namespace graphon {

/// Step-function graphon: k consecutive intervals of positive width summing
/// to 1, and a symmetric k x k value matrix with entries in [0,1]. Interval
/// lookup is half-open [a,b), with the last interval closed at 1.
class StepGraphon {
public:
    StepGraphon(std::vector<double> widths, Matrix values);

    std::size_t step_count() const { return widths_.size(); }
    const std::vector<double>& widths() const { return widths_; }
    const Matrix& values() const { return values_; }

    /// Index of the step containing x in [0,1].
    std::size_t step_of(double x) const;

    double eval(double x, double y) const;

private:
    std::vector<double> widths_;
    Matrix values_;
    std::vector<double> breaks_;  // cumulative: 0, w0, w0+w1, ..., 1
};

/// Graphon given by an arbitrary symmetric measurable map [0,1]^2 -> [0,1].
struct AnalyticGraphon {
    std::function<double(double, double)> evaluator;

    double eval(double x, double y) const;
};

using Graphon = std::variant<StepGraphon, AnalyticGraphon>;

double eval(const Graphon& w, double x, double y);

/// A sampled graph together with the latent uniforms that produced it and
/// the latent value matrix M_ij = W(U_i, U_j), kept for error evaluation.
struct GraphonSample {
    Graph graph;
    std::vector<double> latents;
    Matrix values;
};

/// M_ij = W(U_i, U_j) for the given latents. Consumes no randomness.
Matrix value_matrix(const Graphon& w, std::span<const double> latents);

/// Samples the n-vertex W-random graph. Stream layout: n latent uniforms in
/// vertex order, then one Bernoulli draw per pair (i,j), i<j, row-major.
GraphonSample sample(const Graphon& w, std::size_t n, std::uint64_t seed);

/// Like sample() but with deterministic latents U_i = (i - 0.5)/n (sorted).
/// Edge draws consume the stream exactly as in sample(); for {0,1}-valued
/// graphons the resulting graph does not depend on the seed.
GraphonSample grid_sample(const Graphon& w, std::size_t n, std::uint64_t seed);

/// Redraws edges for fixed latent values; test hook for conditional
/// edge-frequency checks. One draw per pair (i,j), i<j, row-major.
Graph sample_edges(const Matrix& values, std::uint64_t seed);
Graph sample_edges(const Matrix& values, RandomStream& rng);

/// Step-function graphon of a weighted graph: widths from vertex weights
/// (all must be positive), values from edge weights.
StepGraphon step_graphon_of_weighted_graph(const WeightedGraph& h);

/// A plain graph viewed as a weighted graph: vertex weights 1/n, edge
/// weights 0/1 from the adjacency matrix.
WeightedGraph as_weighted_graph(const Graph& g);

StepGraphon step_graphon_of_graph(const Graph& g);

/// The estimator W_{G/P}: step-function of the quotient graph.
StepGraphon estimate_step_graphon(const Graph& g, const Partition& p);

/// Piecewise-constant approximation on r equal steps, midpoint evaluation.
StepGraphon discretize(const Graphon& w, std::size_t r);

}  // namespace graphon
