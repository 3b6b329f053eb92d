#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "graphon/graph.hpp"

namespace graphon {

/// Configuration for the 2-block SBM classification experiment: a graph of
/// size n, an initial k-class partition correct on a tau fraction of the
/// vertices, and one random-centroid refinement aiming for tau_prime.
struct SbmAnalysisConfig {
    std::size_t n = 0;
    std::size_t k = 0;
    double p = 0.5;      // first block width, at most 1/2
    double q0 = 0.0;     // within-block density
    double q1 = 0.0;     // cross-block density, below q0
    double tau = 0.0;    // initial correct fraction, above 1 - 1/(4k)
    double tau_prime = 0.0;
    double epsilon = 0.0;
    double xi = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Which block each vertex's latent fell in: 0 for A (U < p), 1 for B.
struct GroundTruth {
    std::vector<std::uint8_t> block;
};

struct ConditionCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
};

struct TheoremReport {
    SbmAnalysisConfig config;
    double delta = 0.0;
    ConditionCheck condition_i;
    ConditionCheck condition_ii;
    double p_k = 0.0;
    double bound = 0.0;
    bool vacuous = false;         // a bound factor was clamped at zero
    bool conditions_met = false;
    bool has_empirical = false;
    double empirical_frequency = 0.0;
    std::vector<double> per_trial_fractions;
};

/// Samples a 2-block SBM graph, keeping the block labels. Stream layout
/// matches sample(sbm2(...), n, seed): n latent uniforms, then one Bernoulli
/// per pair (i,j), i<j, row-major.
std::pair<Graph, GroundTruth> sample_sbm_with_blocks(std::size_t n, double p, double q0,
                                                     double q1, std::uint64_t seed);

/// Fraction of vertices lying in their class's majority block; per class the
/// majority is A on ties.
double majority_fraction(const Partition& p, const GroundTruth& truth);

/// Builds a deliberately tau-correct k-class partition: classes are split
/// into an A side and a B side, vertices go to a uniform class on their own
/// block's side, then floor((1-tau) n) vertices picked without replacement
/// move to a uniform class on the opposite side. Empty classes are repaired
/// from the largest class.
Partition corrupt_partition(const GroundTruth& truth, std::size_t k, double tau,
                            std::uint64_t seed);

/// Refinement step with k centroids drawn uniformly without replacement;
/// every other vertex joins the centroid whose weighted edge-density vector
/// (against `previous`) is L1-nearest, ties broken uniformly at random.
Partition random_centroid_iteration(const Graph& g, const Partition& previous, std::size_t k,
                                    std::uint64_t seed);

/// delta = (1 + sqrt(1 - 4k(1-tau)))/2; satisfies delta - delta^2 = k(1-tau).
double delta_from_tau(std::size_t k, double tau);

/// q0 - q1 >= (3 - sqrt(1-4k(1-tau)))/tau - 2 + 4 eps
///            + (1 - sqrt(1-4k(1-tau)))/(n tau (1-tau)).
/// At tau = 1 the last term degenerates (no vertex is misplaced); the check
/// is reported as trivially satisfied with the term at its limit 2k/n.
ConditionCheck condition_i(const SbmAnalysisConfig& cfg);

/// eps^2 n > -12 k log((1 - (tau' + xi)^(1/k)) / 2); needs tau' + xi < 1.
ConditionCheck condition_ii(const SbmAnalysisConfig& cfg);

/// p_k (1 - 2 exp(-eps^2 n / 12k))^(k^2) (1 - 2 exp(-xi^2 n / 3)) with
/// p_k = 1 - p^k - (1-p)^k; negative factors clamp the result to zero.
double theorem_bound(const SbmAnalysisConfig& cfg);

/// All derived quantities, no trials run.
TheoremReport evaluate_theorem(const SbmAnalysisConfig& cfg);

/// Chernoff lower bound 1 - 2 exp(-eps^2 n / (3 zeta)) on the probability
/// that a Binomial(n, zeta)/n average lands within eps of zeta.
double chernoff_lower_bound(std::size_t n, double zeta, double eps);

/// Runs the experiment: per trial, sample an SBM graph, corrupt a partition
/// to tau-correctness, refine once with random centroids, and record the
/// correctly classified fraction. Trials use seeds split from cfg.seed by
/// trial index.
TheoremReport monte_carlo_theorem(const SbmAnalysisConfig& cfg);

/// Diagnostic: for each vertex, whether its density to every delta-large,
/// delta-good class majority sits within eps of the expected q0/q1. The
/// self-loop completion densities draw virtual loops from `selfloop_seed`;
/// the graph itself is never modified.
std::vector<bool> epsilon_delta_good(const Graph& g, const GroundTruth& truth,
                                     const Partition& p, double q0, double q1, double eps,
                                     double delta, std::uint64_t selfloop_seed);

/// Flat name=value serialization, one field per line, stable ordering.
void write_report(const TheoremReport& report, std::ostream& out);

/// Optional companion CSV: trial,majority_fraction.
void write_per_trial_csv(const TheoremReport& report, std::ostream& out);

/// Parses the flat name=value config format ('#' starts a comment line).
SbmAnalysisConfig parse_analysis_config(std::istream& in);

}  // namespace graphon
