#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphon/graph.hpp"
#include "graphon/graphon.hpp"

namespace graphon {

/// Knobs for the iterative step-function estimator.
///
/// A refinement pass sweeps the vertices once, grouping each vertex with the
/// nearest centroid (L1 on weighted edge-density vectors) if that distance is
/// below epsilon, and opening a new class otherwise. Passes repeat with
/// epsilon shrunk by `decay` until at least `min_classes` classes come out,
/// or until `epsilon_floor` / `max_passes` stops the loop (distinct vertices
/// can have identical density vectors, so `min_classes` alone is not a
/// termination guarantee).
struct IsfeConfig {
    std::size_t min_classes = 1;
    /// Per-pass epsilon shrink factor. 0.9 keeps the class count from
    /// overshooting min_classes: pairwise density-vector distances
    /// concentrate, so a halving step can jump from a handful of classes
    /// straight to one per vertex and the refinement never settles.
    double decay = 0.9;
    std::size_t max_iterations = 0;
    double epsilon_floor = 0x1p-30;
    std::size_t max_passes = 256;
    /// When latent values are available: once an iteration has improved the
    /// MSE by at least this much, stop at the first iteration that fails to.
    /// Zero disables the early stop.
    double stop_threshold = 0.0;
};

struct IterationResult {
    Partition partition;
    bool guard_hit;  // epsilon floor or pass cap ended the loop short of min_classes
    std::size_t passes;
};

/// One refinement iteration. Each pass restarts from Q = {{vertex 0}} with
/// vertex 0 as its centroid; centroid density vectors are taken against
/// `previous`, never against the partition under construction. Distance ties
/// go to the lowest class index. At least one full pass always runs, so the
/// result is a partition of the whole vertex set even when min_classes <= 1.
IterationResult isfe_iteration(const Graph& g, const Partition& previous,
                               const IsfeConfig& cfg);

/// Per-iteration history of an estimator run. Entry 0 describes the initial
/// partition; estimates are computed from density-sorted classes.
struct EstimationTrace {
    std::vector<Partition> partitions;
    std::vector<StepGraphon> step_graphons;
    std::vector<Matrix> value_estimates;
    std::vector<bool> guard_flags;
    std::vector<double> mse_history;  // empty unless latent values were given

    std::size_t iterations() const { return partitions.empty() ? 0 : partitions.size() - 1; }
};

/// Runs up to cfg.max_iterations refinement iterations, feeding each output
/// partition into the next. With latent values and a positive
/// cfg.stop_threshold, stops at the first iteration whose MSE improvement
/// falls below the threshold after at least one iteration has cleared it.
EstimationTrace isfe_run(const Graph& g, const Partition& initial, const IsfeConfig& cfg,
                         const Matrix* latent_values = nullptr);

enum class InitKind { trivial, discrete, random_k, degree_bins };

struct InitSpec {
    InitKind kind = InitKind::trivial;
    std::size_t k = 0;
};

/// Parses "trivial", "discrete", "random:K", or "degree:K".
InitSpec parse_init_spec(const std::string& text);

/// Builds the requested starting partition. random_k assigns each vertex
/// uniformly to one of k classes (empty classes compacted away); degree_bins
/// sorts by descending degree (ties by index) and cuts k near-equal bins.
Partition initial_partition(const Graph& g, const InitSpec& spec, std::uint64_t seed = 0);

/// Classes reindexed by descending edge density to the whole vertex set,
/// ties keeping the original order.
Partition sort_classes(const Graph& g, const Partition& p);

/// Graphon value estimate: entry (i,j) is the quotient edge weight between
/// the classes of i and j. Callers sort the partition first when the grid
/// order matters.
Matrix value_estimate(const Graph& g, const Partition& p);

/// Estimator induced by an arbitrary clustering: sort classes, then take the
/// quotient step-function.
StepGraphon cluster_then_quotient(const Graph& g, const Partition& p);

}  // namespace graphon
