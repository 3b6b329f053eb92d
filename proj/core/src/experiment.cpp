#include "graphon/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "graphon/analysis.hpp"
#include "graphon/generators.hpp"
#include "graphon/metrics.hpp"
#include "graphon/random.hpp"

namespace graphon {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct RunResult {
    std::size_t iterations;
    double mse_value;
    double runtime_ms;
};

RunResult run_single(const ExperimentSpec& spec, const Graphon& w, std::size_t n,
                     std::uint64_t run_seed) {
    const auto started = std::chrono::steady_clock::now();

    const GraphonSample gs = sample(w, n, derive_seed(run_seed, 0));
    const Partition init =
        initial_partition(gs.graph, parse_init_spec(spec.init), derive_seed(run_seed, 1));

    RunResult out{};
    if (spec.estimator == "quotient") {
        const Matrix estimate = value_estimate(gs.graph, sort_classes(gs.graph, init));
        out.iterations = 0;
        out.mse_value = mse(estimate, gs.values);
    } else if (spec.estimator == "isfe") {
        const EstimationTrace trace = isfe_run(gs.graph, init, spec.isfe, &gs.values);
        out.iterations = trace.iterations();
        out.mse_value = trace.mse_history.back();
    } else {
        throw std::invalid_argument("unknown estimator: " + spec.estimator +
                                    " (expected isfe or quotient)");
    }

    const auto elapsed = std::chrono::steady_clock::now() - started;
    out.runtime_ms = std::chrono::duration<double, std::milli>(elapsed).count();
    return out;
}

}  // namespace

void run_experiment(const ExperimentSpec& spec, std::ostream& rows, std::ostream& summary) {
    if (spec.sizes.empty()) throw std::invalid_argument("experiment: size list is empty");
    if (spec.seeds == 0) throw std::invalid_argument("experiment: seed count must be positive");
    for (std::size_t n : spec.sizes)
        if (n == 0) throw std::invalid_argument("experiment: graph sizes must be positive");

    rows << "graphon,estimator,n,seed,iterations,mse,runtime_ms\n";
    summary << "graphon,estimator,n,runs,mse_mean,mse_sd\n";

    // Seeded generators (irm) draw from a stream reserved off the master seed,
    // away from the per-run indices.
    const Graphon w = parse_graphon_spec(spec.graphon_spec,
                                         derive_seed(spec.master_seed, ~std::uint64_t{0}));

    std::size_t run_index = 0;
    for (std::size_t n : spec.sizes) {
        std::vector<double> mses;
        mses.reserve(spec.seeds);
        for (std::size_t s = 0; s < spec.seeds; ++s, ++run_index) {
            const RunResult r = run_single(spec, w, n, derive_seed(spec.master_seed, run_index));
            mses.push_back(r.mse_value);
            rows << spec.graphon_spec << "," << spec.estimator << "," << n << "," << s << ","
                 << r.iterations << "," << fmt(r.mse_value) << "," << fmt(r.runtime_ms) << "\n";
        }
        double mean = 0.0;
        for (double v : mses) mean += v;
        mean /= static_cast<double>(mses.size());
        double var = 0.0;
        for (double v : mses) var += (v - mean) * (v - mean);
        const double sd = mses.size() > 1 ? std::sqrt(var / static_cast<double>(mses.size() - 1)) : 0.0;
        summary << spec.graphon_spec << "," << spec.estimator << "," << n << "," << mses.size()
                << "," << fmt(mean) << "," << fmt(sd) << "\n";
    }
}

std::string summary_path_for(const std::string& rows_path) {
    const std::string suffix = ".csv";
    if (rows_path.size() > suffix.size() &&
        rows_path.compare(rows_path.size() - suffix.size(), suffix.size(), suffix) == 0)
        return rows_path.substr(0, rows_path.size() - suffix.size()) + ".summary.csv";
    return rows_path + ".summary.csv";
}

void run_experiment_files(const ExperimentSpec& spec, const std::string& rows_path) {
    std::ofstream rows(rows_path);
    if (!rows) throw std::runtime_error("cannot open for writing: " + rows_path);
    std::ofstream summary(summary_path_for(rows_path));
    if (!summary) throw std::runtime_error("cannot open for writing: " + summary_path_for(rows_path));
    run_experiment(spec, rows, summary);
}

bool run_theorem_file(const std::string& config_path, const std::string& report_path,
                      const std::string& per_trial_csv_path) {
    std::ifstream cfg_in(config_path);
    if (!cfg_in) throw std::runtime_error("cannot open theorem config: " + config_path);
    const SbmAnalysisConfig cfg = parse_analysis_config(cfg_in);

    const TheoremReport report = monte_carlo_theorem(cfg);

    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot open for writing: " + report_path);
    write_report(report, out);

    if (!per_trial_csv_path.empty()) {
        std::ofstream csv(per_trial_csv_path);
        if (!csv) throw std::runtime_error("cannot open for writing: " + per_trial_csv_path);
        write_per_trial_csv(report, csv);
    }

    if (!report.conditions_met) return true;  // nothing the bound promises
    if (!report.has_empirical) return false;
    const double sigma =
        std::sqrt(report.bound * (1.0 - report.bound) / static_cast<double>(cfg.trials));
    return report.empirical_frequency >= report.bound - 3.0 * sigma;
}

Preset parse_preset(std::istream& in) {
    Preset preset;
    std::map<std::string, std::string> keys;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("preset line " + std::to_string(line_no) +
                                     ": expected name=value");
        keys[line.substr(0, eq)] = line.substr(eq + 1);
    }
    auto need = [&](const std::string& key) -> const std::string& {
        const auto it = keys.find(key);
        if (it == keys.end()) throw std::runtime_error("preset: missing key '" + key + "'");
        return it->second;
    };
    preset.name = need("name");
    preset.top_k = std::stoull(need("top_k"));
    preset.iterations = std::stoull(need("iterations"));
    preset.min_classes = std::stoull(need("min_classes"));
    preset.init = need("init");
    if (keys.count("expected_vertices"))
        preset.expected_vertices = std::stoull(keys["expected_vertices"]);
    if (keys.count("expected_edges")) preset.expected_edges = std::stoull(keys["expected_edges"]);
    return preset;
}

Preset parse_preset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open preset: " + path);
    return parse_preset(in);
}

void validate_against_preset(const Graph& g, const Preset& preset) {
    if (preset.expected_vertices && g.size() != *preset.expected_vertices)
        throw std::runtime_error("preset '" + preset.name + "': expected " +
                                 std::to_string(*preset.expected_vertices) + " vertices, got " +
                                 std::to_string(g.size()));
    if (preset.expected_edges && g.edge_total() != *preset.expected_edges)
        throw std::runtime_error("preset '" + preset.name + "': expected " +
                                 std::to_string(*preset.expected_edges) + " edges, got " +
                                 std::to_string(g.edge_total()));
}

}  // namespace graphon
