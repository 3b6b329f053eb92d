#pragma once

#include "graphon/graph.hpp"
#include "graphon/graphon.hpp"
#include "graphon/matrix.hpp"

namespace graphon {

/// Mean squared error over all entries, diagonal included.
double mse(const Matrix& estimate, const Matrix& truth);

/// Two step graphons re-expressed on the merged breakpoint grid, the exact
/// integration support for piecewise-constant pairs.
struct CommonRefinement {
    std::vector<double> widths;
    Matrix values_a;
    Matrix values_b;
};

CommonRefinement common_refinement(const StepGraphon& a, const StepGraphon& b);

/// Exact L^p distance (p = 1 or 2) under the identity alignment.
double lp_distance(const StepGraphon& a, const StepGraphon& b, int p);

/// Steps reordered by descending width-weighted row average (the step's
/// degree), ties by width, then by original position.
StepGraphon canonical_sort(const StepGraphon& w);

/// Upper bound on the mean integrated squared error: squared L2 after
/// canonically sorting both graphons. The true infimum over
/// measure-preserving maps is never computed.
double mise_upper_bound(const StepGraphon& a, const StepGraphon& b);

/// Exact cut metric between graphs on the same vertex set (n <= 24):
/// max over S,T of |c_F(S,T) - c_G(S,T)| / n^2.
double cut_metric_graphs(const Graph& f, const Graph& g);

/// Exact cut distance: cut metric minimized over all vertex relabelings
/// (n <= 8).
double cut_distance_graphs(const Graph& f, const Graph& g);

/// Exact cut metric between step graphons; requires the common refinement to
/// have at most 24 steps.
double cut_metric_step(const StepGraphon& a, const StepGraphon& b);

/// Upper bound on the cut distance between step graphons: exact minimum over
/// step permutations when both have at most 8 steps, otherwise a single cut
/// metric after canonical sorting.
double cut_distance_step_upper(const StepGraphon& a, const StepGraphon& b);

}  // namespace graphon
