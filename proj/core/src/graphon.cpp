#include "graphon/graphon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace graphon {

namespace {

constexpr double kWidthSumTolerance = 1e-12;

void check_unit_coordinate(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::out_of_range(std::string(what) + ": coordinate outside [0,1]");
}

std::vector<double> grid_latents(std::size_t n) {
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i)
        u[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    return u;
}

}  // namespace

StepGraphon::StepGraphon(std::vector<double> widths, Matrix values)
    : widths_(std::move(widths)), values_(std::move(values)) {
    const std::size_t k = widths_.size();
    if (k == 0) throw std::invalid_argument("StepGraphon: needs at least one step");
    if (values_.rows() != k || values_.cols() != k)
        throw std::invalid_argument("StepGraphon: value matrix must be k x k");
    double sum = 0.0;
    for (double w : widths_) {
        if (!(w > 0.0)) throw std::invalid_argument("StepGraphon: widths must be positive");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWidthSumTolerance)
        throw std::invalid_argument("StepGraphon: widths must sum to 1");
    if (!values_.values_in_unit_interval())
        throw std::invalid_argument("StepGraphon: values must lie in [0,1]");
    if (!values_.is_symmetric())
        throw std::invalid_argument("StepGraphon: values must be symmetric");

    breaks_.resize(k + 1);
    breaks_[0] = 0.0;
    for (std::size_t i = 0; i < k; ++i) breaks_[i + 1] = breaks_[i] + widths_[i];
    breaks_[k] = 1.0;
}

std::size_t StepGraphon::step_of(double x) const {
    check_unit_coordinate(x, "StepGraphon::step_of");
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    const auto idx = static_cast<std::size_t>(it - breaks_.begin());
    // x == 1 falls past the final break; the last interval is closed.
    return std::min(idx == 0 ? std::size_t{0} : idx - 1, step_count() - 1);
}

double StepGraphon::eval(double x, double y) const {
    return values_(step_of(x), step_of(y));
}

double AnalyticGraphon::eval(double x, double y) const {
    check_unit_coordinate(x, "AnalyticGraphon::eval");
    check_unit_coordinate(y, "AnalyticGraphon::eval");
    return evaluator(x, y);
}

double eval(const Graphon& w, double x, double y) {
    return std::visit([&](const auto& g) { return g.eval(x, y); }, w);
}

Matrix value_matrix(const Graphon& w, std::span<const double> latents) {
    const std::size_t n = latents.size();
    Matrix m(n, n, 0.0);
    if (const auto* step = std::get_if<StepGraphon>(&w)) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = step->step_of(latents[i]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const double v = step->values()(idx[i], idx[j]);
                m(i, j) = v;
                m(j, i) = v;
            }
    } else {
        const auto& a = std::get<AnalyticGraphon>(w);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const double v = a.eval(latents[i], latents[j]);
                m(i, j) = v;
                m(j, i) = v;
            }
    }
    return m;
}

Graph sample_edges(const Matrix& values, RandomStream& rng) {
    const std::size_t n = values.rows();
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.bernoulli(values(i, j))) g.add_edge(i, j);
    return g;
}

Graph sample_edges(const Matrix& values, std::uint64_t seed) {
    RandomStream rng(seed);
    return sample_edges(values, rng);
}

GraphonSample sample(const Graphon& w, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("sample: vertex count must be positive");
    RandomStream rng(seed);
    std::vector<double> latents(n);
    for (std::size_t i = 0; i < n; ++i) latents[i] = rng.uniform();
    Matrix values = value_matrix(w, latents);
    Graph g = sample_edges(values, rng);
    return {std::move(g), std::move(latents), std::move(values)};
}

GraphonSample grid_sample(const Graphon& w, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("grid_sample: vertex count must be positive");
    RandomStream rng(seed);
    std::vector<double> latents = grid_latents(n);
    Matrix values = value_matrix(w, latents);
    Graph g = sample_edges(values, rng);
    return {std::move(g), std::move(latents), std::move(values)};
}

StepGraphon step_graphon_of_weighted_graph(const WeightedGraph& h) {
    for (double w : h.vertex_weights)
        if (!(w > 0.0))
            throw std::invalid_argument(
                "step_graphon_of_weighted_graph: zero-weight nodes have no step");
    return StepGraphon(h.vertex_weights, h.edge_weights);
}

WeightedGraph as_weighted_graph(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<double> weights(n, 1.0 / static_cast<double>(n));
    Matrix values(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            values(i, j) = g.has_edge(i, j) ? 1.0 : 0.0;
    return WeightedGraph(std::move(weights), std::move(values));
}

StepGraphon step_graphon_of_graph(const Graph& g) {
    return step_graphon_of_weighted_graph(as_weighted_graph(g));
}

StepGraphon estimate_step_graphon(const Graph& g, const Partition& p) {
    return step_graphon_of_weighted_graph(quotient(g, p));
}

StepGraphon discretize(const Graphon& w, std::size_t r) {
    if (r == 0) throw std::invalid_argument("discretize: resolution must be positive");
    std::vector<double> midpoints(r);
    for (std::size_t a = 0; a < r; ++a)
        midpoints[a] = (static_cast<double>(a) + 0.5) / static_cast<double>(r);
    Matrix values(r, r, 0.0);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a; b < r; ++b) {
            const double v = eval(w, midpoints[a], midpoints[b]);
            values(a, b) = v;
            values(b, a) = v;
        }
    return StepGraphon(std::vector<double>(r, 1.0 / static_cast<double>(r)), std::move(values));
}

}  // namespace graphon
