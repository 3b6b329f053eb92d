#include "graphon/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace graphon {

namespace {

constexpr std::size_t kSubsetLimit = 24;      // 2^24 subsets is the desk-scale ceiling
constexpr std::size_t kPermutationLimit = 8;  // 8! relabelings
constexpr double kRefinementEps = 1e-15;

/// Maximum over S,T in {0,1}^k of |sum_{i in S, j in T} row_weight_i *
/// col_weight_j * delta_ij|, by enumerating S in Gray-code order and picking
/// T greedily per sign. The objective is bilinear in the indicator relaxation
/// (s,t) in [0,1]^{2k}, so its supremum sits at a 0/1 vertex: for fixed s it
/// is linear in each t_j, hence maximized by t_j = [col_j > 0] (or the
/// complement for the negative branch), and the same argument in s reduces
/// the search to subsets.
double bilinear_cut_max(std::size_t k, const std::vector<double>& delta,
                        const std::vector<double>& row_weight,
                        const std::vector<double>& col_weight) {
    std::vector<double> col(k, 0.0);
    double best = 0.0;
    const std::uint32_t subsets = std::uint32_t{1} << k;
    for (std::uint32_t step = 1; step < subsets; ++step) {
        // Gray order: step toggles exactly one vertex; it is in S afterwards
        // iff its bit is set in gray(step).
        const auto v = static_cast<std::size_t>(std::countr_zero(step));
        const bool entering = (((step ^ (step >> 1)) >> v) & 1u) != 0;
        const double w = (entering ? 1.0 : -1.0) * row_weight[v];
        double pos = 0.0, neg = 0.0;
        const double* drow = delta.data() + v * k;
        for (std::size_t j = 0; j < k; ++j) {
            col[j] += w * drow[j];
            const double contribution = col_weight[j] * col[j];
            if (contribution > 0.0)
                pos += contribution;
            else
                neg += contribution;
        }
        best = std::max({best, pos, -neg});
    }
    return best;
}

/// Integer twin of bilinear_cut_max for 0/±1 graph differences; exact.
std::int64_t integer_cut_max(std::size_t n, const std::vector<std::int8_t>& delta) {
    std::vector<std::int64_t> col(n, 0);
    std::int64_t best = 0;
    const std::uint32_t subsets = std::uint32_t{1} << n;
    for (std::uint32_t step = 1; step < subsets; ++step) {
        const auto v = static_cast<std::size_t>(std::countr_zero(step));
        const bool entering = (((step ^ (step >> 1)) >> v) & 1u) != 0;
        const std::int64_t sign = entering ? 1 : -1;
        std::int64_t pos = 0, neg = 0;
        const std::int8_t* drow = delta.data() + v * n;
        for (std::size_t j = 0; j < n; ++j) {
            col[j] += sign * drow[j];
            if (col[j] > 0)
                pos += col[j];
            else
                neg += col[j];
        }
        best = std::max({best, pos, -neg});
    }
    return best;
}

std::vector<std::int8_t> adjacency_difference(const Graph& f, const Graph& g) {
    const std::size_t n = f.size();
    std::vector<std::int8_t> delta(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            delta[i * n + j] = static_cast<std::int8_t>((f.has_edge(i, j) ? 1 : 0) -
                                                        (g.has_edge(i, j) ? 1 : 0));
    return delta;
}

StepGraphon permute_steps(const StepGraphon& w, const std::vector<std::uint32_t>& order) {
    const std::size_t k = w.step_count();
    std::vector<double> widths(k);
    Matrix values(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        widths[i] = w.widths()[order[i]];
        for (std::size_t j = 0; j < k; ++j) values(i, j) = w.values()(order[i], order[j]);
    }
    return StepGraphon(std::move(widths), std::move(values));
}

}  // namespace

double mse(const Matrix& estimate, const Matrix& truth) {
    if (!estimate.same_shape(truth)) throw std::invalid_argument("mse: dimension mismatch");
    const std::size_t entries = estimate.rows() * estimate.cols();
    if (entries == 0) throw std::invalid_argument("mse: empty matrices");
    double total = 0.0;
    for (std::size_t i = 0; i < entries; ++i) {
        const double d = truth.data()[i] - estimate.data()[i];
        total += d * d;
    }
    return total / static_cast<double>(entries);
}

CommonRefinement common_refinement(const StepGraphon& a, const StepGraphon& b) {
    struct Cell {
        double width;
        std::size_t ia, ib;
    };
    std::vector<Cell> cells;
    std::size_t ia = 0, ib = 0;
    double rem_a = a.widths()[0], rem_b = b.widths()[0];
    while (ia < a.step_count() && ib < b.step_count()) {
        const double w = std::min(rem_a, rem_b);
        if (w >= kRefinementEps) cells.push_back({w, ia, ib});
        rem_a -= w;
        rem_b -= w;
        if (rem_a < kRefinementEps) {
            ++ia;
            if (ia < a.step_count()) rem_a = a.widths()[ia];
        }
        if (rem_b < kRefinementEps) {
            ++ib;
            if (ib < b.step_count()) rem_b = b.widths()[ib];
        }
    }

    CommonRefinement out;
    const std::size_t m = cells.size();
    out.widths.resize(m);
    out.values_a = Matrix(m, m);
    out.values_b = Matrix(m, m);
    for (std::size_t r = 0; r < m; ++r) {
        out.widths[r] = cells[r].width;
        for (std::size_t s = 0; s < m; ++s) {
            out.values_a(r, s) = a.values()(cells[r].ia, cells[s].ia);
            out.values_b(r, s) = b.values()(cells[r].ib, cells[s].ib);
        }
    }
    return out;
}

double lp_distance(const StepGraphon& a, const StepGraphon& b, int p) {
    if (p != 1 && p != 2) throw std::invalid_argument("lp_distance: p must be 1 or 2");
    const CommonRefinement r = common_refinement(a, b);
    const std::size_t m = r.widths.size();
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const double d = std::abs(r.values_a(i, j) - r.values_b(i, j));
            total += r.widths[i] * r.widths[j] * (p == 1 ? d : d * d);
        }
    return p == 1 ? total : std::sqrt(total);
}

StepGraphon canonical_sort(const StepGraphon& w) {
    const std::size_t k = w.step_count();
    std::vector<double> degree(k, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) degree[i] += w.widths()[j] * w.values()(i, j);
    std::vector<std::uint32_t> order(k);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        if (degree[x] != degree[y]) return degree[x] > degree[y];
        return w.widths()[x] > w.widths()[y];
    });
    return permute_steps(w, order);
}

double mise_upper_bound(const StepGraphon& a, const StepGraphon& b) {
    const StepGraphon sa = canonical_sort(a);
    const StepGraphon sb = canonical_sort(b);
    const CommonRefinement r = common_refinement(sa, sb);
    const std::size_t m = r.widths.size();
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const double d = r.values_a(i, j) - r.values_b(i, j);
            total += r.widths[i] * r.widths[j] * d * d;
        }
    return total;
}

double cut_metric_graphs(const Graph& f, const Graph& g) {
    const std::size_t n = f.size();
    if (g.size() != n) throw std::invalid_argument("cut_metric_graphs: vertex count mismatch");
    if (n > kSubsetLimit)
        throw std::invalid_argument("cut_metric_graphs: exact enumeration capped at n <= " +
                                    std::to_string(kSubsetLimit) + ", got n = " +
                                    std::to_string(n));
    const auto delta = adjacency_difference(f, g);
    const std::int64_t best = integer_cut_max(n, delta);
    return static_cast<double>(best) / (static_cast<double>(n) * static_cast<double>(n));
}

double cut_distance_graphs(const Graph& f, const Graph& g) {
    const std::size_t n = f.size();
    if (g.size() != n) throw std::invalid_argument("cut_distance_graphs: vertex count mismatch");
    if (n > kPermutationLimit)
        throw std::invalid_argument("cut_distance_graphs: relabeling search capped at n <= " +
                                    std::to_string(kPermutationLimit) + ", got n = " +
                                    std::to_string(n));
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    double best = 1.0;
    do {
        Graph relabeled(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (g.has_edge(i, j)) relabeled.add_edge(perm[i], perm[j]);
        best = std::min(best, cut_metric_graphs(f, relabeled));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

double cut_metric_step(const StepGraphon& a, const StepGraphon& b) {
    const CommonRefinement r = common_refinement(a, b);
    const std::size_t m = r.widths.size();
    if (m > kSubsetLimit)
        throw std::invalid_argument("cut_metric_step: common refinement has " + std::to_string(m) +
                                    " steps, exact enumeration capped at " +
                                    std::to_string(kSubsetLimit));
    std::vector<double> delta(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            delta[i * m + j] = r.values_a(i, j) - r.values_b(i, j);
    return bilinear_cut_max(m, delta, r.widths, r.widths);
}

double cut_distance_step_upper(const StepGraphon& a, const StepGraphon& b) {
    if (a.step_count() <= kPermutationLimit && b.step_count() <= kPermutationLimit) {
        std::vector<std::uint32_t> perm(b.step_count());
        std::iota(perm.begin(), perm.end(), 0u);
        double best = 1.0;
        do {
            best = std::min(best, cut_metric_step(a, permute_steps(b, perm)));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }
    return cut_metric_step(canonical_sort(a), canonical_sort(b));
}

}  // namespace graphon
