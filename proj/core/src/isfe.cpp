#include "graphon/isfe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "graphon/metrics.hpp"
#include "graphon/random.hpp"

namespace graphon {

namespace {

double row_l1(const Matrix& m, std::size_t a, std::size_t b) {
    double total = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) total += std::abs(m(a, c) - m(b, c));
    return total;
}

Partition compact_assignment(std::vector<std::uint32_t> assignment) {
    // Drop empty class ids and renumber the rest in ascending order.
    std::uint32_t max_id = 0;
    for (std::uint32_t c : assignment) max_id = std::max(max_id, c);
    std::vector<std::uint32_t> remap(max_id + 1, UINT32_MAX);
    std::uint32_t next = 0;
    std::vector<bool> used(max_id + 1, false);
    for (std::uint32_t c : assignment) used[c] = true;
    for (std::uint32_t c = 0; c <= max_id; ++c)
        if (used[c]) remap[c] = next++;
    for (auto& c : assignment) c = remap[c];
    return Partition(std::move(assignment), next);
}

}  // namespace

IterationResult isfe_iteration(const Graph& g, const Partition& previous,
                               const IsfeConfig& cfg) {
    if (previous.size() != g.size())
        throw std::invalid_argument("isfe_iteration: partition size mismatch");
    if (!(cfg.decay > 0.0 && cfg.decay < 1.0))
        throw std::invalid_argument("isfe_iteration: decay must lie in (0,1)");
    if (!(cfg.epsilon_floor > 0.0))
        throw std::invalid_argument("isfe_iteration: epsilon_floor must be positive");
    if (cfg.min_classes == 0 || cfg.max_passes == 0)
        throw std::invalid_argument("isfe_iteration: min_classes and max_passes must be positive");

    const std::size_t n = g.size();
    const Matrix densities = all_density_vectors(g, previous);

    std::vector<std::uint32_t> assignment(n, 0);
    std::vector<std::uint32_t> centroids;  // class index -> centroid vertex
    double epsilon = 1.0;
    std::size_t passes = 0;
    bool guard_hit = false;

    for (;;) {
        ++passes;
        assignment.assign(n, 0);
        centroids.assign(1, 0);  // vertex 0 anchors the first class
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t best = 0;
            double best_dist = row_l1(densities, i, centroids[0]);
            for (std::size_t c = 1; c < centroids.size(); ++c) {
                const double d = row_l1(densities, i, centroids[c]);
                if (d < best_dist) {
                    best_dist = d;
                    best = c;
                }
            }
            if (best_dist < epsilon) {
                assignment[i] = static_cast<std::uint32_t>(best);
            } else {
                assignment[i] = static_cast<std::uint32_t>(centroids.size());
                centroids.push_back(static_cast<std::uint32_t>(i));
            }
        }
        if (centroids.size() >= cfg.min_classes) break;
        epsilon *= cfg.decay;
        if (epsilon < cfg.epsilon_floor || passes >= cfg.max_passes) {
            guard_hit = true;
            break;
        }
    }

    return {Partition(std::move(assignment), centroids.size()), guard_hit, passes};
}

EstimationTrace isfe_run(const Graph& g, const Partition& initial, const IsfeConfig& cfg,
                         const Matrix* latent_values) {
    EstimationTrace trace;
    const bool track_mse = latent_values != nullptr;

    auto record = [&](const Partition& p, bool guard) {
        const Partition sorted = sort_classes(g, p);
        trace.partitions.push_back(p);
        trace.step_graphons.push_back(estimate_step_graphon(g, sorted));
        trace.value_estimates.push_back(value_estimate(g, sorted));
        trace.guard_flags.push_back(guard);
        if (track_mse) trace.mse_history.push_back(mse(trace.value_estimates.back(), *latent_values));
    };

    record(initial, false);
    // The stop rule arms once some iteration has improved the MSE by at
    // least the threshold; the very first refinements of a structureless
    // initial partition routinely lose a little ground before the class
    // compositions pick up signal, and stopping there would freeze that
    // transient.
    bool improved_once = false;
    for (std::size_t t = 0; t < cfg.max_iterations; ++t) {
        IterationResult step = isfe_iteration(g, trace.partitions.back(), cfg);
        record(step.partition, step.guard_hit);
        if (track_mse && cfg.stop_threshold > 0.0) {
            const auto& h = trace.mse_history;
            const double improvement = h[h.size() - 2] - h.back();
            if (improvement >= cfg.stop_threshold)
                improved_once = true;
            else if (improved_once)
                break;
        }
    }
    return trace;
}

InitSpec parse_init_spec(const std::string& text) {
    if (text == "trivial") return {InitKind::trivial, 0};
    if (text == "discrete") return {InitKind::discrete, 0};
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        const std::string arg = text.substr(colon + 1);
        std::size_t k = 0;
        try {
            std::size_t used = 0;
            k = std::stoul(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
        } catch (const std::exception&) {
            throw std::invalid_argument("init spec '" + text + "': bad class count");
        }
        if (head == "random") return {InitKind::random_k, k};
        if (head == "degree") return {InitKind::degree_bins, k};
    }
    throw std::invalid_argument("unknown init spec: " + text +
                                " (expected trivial|discrete|random:K|degree:K)");
}

Partition initial_partition(const Graph& g, const InitSpec& spec, std::uint64_t seed) {
    const std::size_t n = g.size();
    switch (spec.kind) {
        case InitKind::trivial:
            return Partition::trivial(n);
        case InitKind::discrete:
            return Partition::discrete(n);
        case InitKind::random_k: {
            if (spec.k == 0) throw std::invalid_argument("initial_partition: k must be positive");
            if (spec.k > n) throw std::invalid_argument("initial_partition: k exceeds vertex count");
            RandomStream rng(seed);
            std::vector<std::uint32_t> assignment(n);
            for (std::size_t v = 0; v < n; ++v)
                assignment[v] = static_cast<std::uint32_t>(rng.uniform_index(spec.k));
            return compact_assignment(std::move(assignment));
        }
        case InitKind::degree_bins: {
            if (spec.k == 0) throw std::invalid_argument("initial_partition: k must be positive");
            if (spec.k > n) throw std::invalid_argument("initial_partition: k exceeds vertex count");
            std::vector<std::uint32_t> order(n);
            std::iota(order.begin(), order.end(), 0u);
            std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
                return g.degree(a) > g.degree(b);
            });
            std::vector<std::uint32_t> assignment(n);
            std::size_t pos = 0;
            for (std::size_t bin = 0; bin < spec.k; ++bin) {
                std::size_t size = n / spec.k + (bin < n % spec.k ? 1 : 0);
                for (std::size_t s = 0; s < size; ++s) assignment[order[pos++]] = static_cast<std::uint32_t>(bin);
            }
            return Partition(std::move(assignment), spec.k);
        }
    }
    throw std::logic_error("initial_partition: unreachable");
}

Partition sort_classes(const Graph& g, const Partition& p) {
    if (p.size() != g.size()) throw std::invalid_argument("sort_classes: partition size mismatch");
    const std::size_t k = p.class_count();
    const std::size_t n = g.size();

    // Score: edge density from the class to the whole vertex set.
    std::vector<double> score(k, 0.0);
    const auto sizes = p.class_sizes();
    for (std::size_t v = 0; v < n; ++v)
        score[p.class_of(v)] += static_cast<double>(g.degree(v));
    for (std::size_t c = 0; c < k; ++c)
        score[c] /= static_cast<double>(sizes[c]) * static_cast<double>(n);

    std::vector<std::uint32_t> order(k);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return score[a] > score[b]; });

    std::vector<std::uint32_t> new_index(k);
    for (std::size_t rank = 0; rank < k; ++rank) new_index[order[rank]] = static_cast<std::uint32_t>(rank);

    std::vector<std::uint32_t> assignment(n);
    for (std::size_t v = 0; v < n; ++v) assignment[v] = new_index[p.class_of(v)];
    return Partition(std::move(assignment), k);
}

Matrix value_estimate(const Graph& g, const Partition& p) {
    const WeightedGraph q = quotient(g, p);
    const std::size_t n = g.size();
    Matrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = q.edge_weights(p.class_of(i), p.class_of(j));
    return m;
}

StepGraphon cluster_then_quotient(const Graph& g, const Partition& p) {
    return estimate_step_graphon(g, sort_classes(g, p));
}

}  // namespace graphon
