#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphon/isfe.hpp"

namespace graphon {

/// A sweep of estimator runs: for each graph size and each seed index,
/// sample the graphon, estimate, and score the value estimate against the
/// latent values.
struct ExperimentSpec {
    std::string graphon_spec;
    std::string estimator = "isfe";  // or "quotient"
    std::string init = "trivial";
    std::vector<std::size_t> sizes;
    std::size_t seeds = 1;
    IsfeConfig isfe;
    std::uint64_t master_seed = 0;
};

/// Runs the sweep. `rows` receives one CSV line per (n, seed) run with
/// header graphon,estimator,n,seed,iterations,mse,runtime_ms; `summary`
/// receives per-n mean/sd rows. Identical specs and master seeds reproduce
/// every byte except the runtime_ms column.
void run_experiment(const ExperimentSpec& spec, std::ostream& rows, std::ostream& summary);

/// File variant; the summary lands next to `rows_path` with a ".summary.csv"
/// suffix replacing ".csv" (or appended when there is no such suffix).
void run_experiment_files(const ExperimentSpec& spec, const std::string& rows_path);

std::string summary_path_for(const std::string& rows_path);

/// Drives the theorem Monte-Carlo harness from a flat name=value config
/// file. Writes the report (and per-trial CSV when requested); returns true
/// when the empirical frequency clears bound - 3 sigma, or when the
/// theorem's conditions were flagged unmet (nothing to verify).
bool run_theorem_file(const std::string& config_path, const std::string& report_path,
                      const std::string& per_trial_csv_path = "");

/// Named parameter bundle for a real-network estimation run.
struct Preset {
    std::string name;
    std::optional<std::size_t> expected_vertices;
    std::optional<std::size_t> expected_edges;
    std::size_t top_k = 0;
    std::size_t iterations = 0;
    std::size_t min_classes = 0;
    std::string init = "trivial";
};

Preset parse_preset(std::istream& in);
Preset parse_preset_file(const std::string& path);

/// Checks an ingested graph against a preset's expected vertex and edge
/// counts; throws with a descriptive message on mismatch.
void validate_against_preset(const Graph& g, const Preset& preset);

}  // namespace graphon
