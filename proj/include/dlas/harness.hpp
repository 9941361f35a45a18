#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dlas/fitness.hpp"
#include "dlas/search.hpp"
#include "dlas/strategy.hpp"

namespace dlas {

enum class ProblemKind { tsp, qap };

inline const char* problem_kind_name(ProblemKind kind) {
  return kind == ProblemKind::tsp ? "tsp" : "qap";
}

inline std::optional<ProblemKind> parse_problem_kind(std::string_view name) {
  if (name == "tsp") return ProblemKind::tsp;
  if (name == "qap") return ProblemKind::qap;
  return std::nullopt;
}

// The length a strategy runs with when none is given.
std::uint64_t default_history_length(StrategyKind strategy, ProblemKind problem);

struct ExperimentSpec {
  std::string instance_path;
  ProblemKind kind = ProblemKind::tsp;
  std::vector<StrategyConfig> strategies;
  std::uint32_t runs_per_config = 1;
  std::optional<double> cutoff_seconds;
  std::optional<std::uint64_t> iteration_budget;
  std::uint64_t base_seed = 1;
  // Overrides the bundled registry; when neither is available the deviation
  // column stays empty.
  std::optional<Fitness> best_known_override;
  std::uint64_t trace_period = 0;
  std::optional<std::string> trace_dir;
};

// Reads a JSON spec file. Unknown or ill-typed fields raise ConfigError
// naming the field; an unreadable file raises IoError.
ExperimentSpec load_experiment_spec(const std::string& path);

struct RunRecord {
  std::string instance;
  StrategyKind strategy = StrategyKind::dlas;
  std::uint64_t history_length = 0;
  std::uint32_t run_index = 0;
  std::uint64_t seed = 0;
  Fitness best_fitness = 0;
  std::optional<Fitness> deviation;
  double time_to_last_best_s = 0.0;
  double hc_like_pct = 0.0;
  std::uint64_t iterations = 0;
  std::uint64_t accepted = 0;
  std::vector<TracePoint> trace;
};

struct AggregateRow {
  StrategyKind strategy = StrategyKind::dlas;
  std::uint64_t history_length = 0;
  std::uint32_t runs = 0;
  double mean_best_fitness = 0.0;
  std::optional<double> mean_deviation;
  double mean_time_to_last_best_s = 0.0;
  double mean_hc_like_pct = 0.0;
  // Labels of strategies this one beats on mean best fitness with the
  // difference significant at confidence 0.95.
  std::vector<std::string> significantly_better_than;
};

struct ExperimentResult {
  std::vector<RunRecord> records;   // ordered by (strategy index, run index)
  std::vector<AggregateRow> aggregates;
  // Wall-clock columns are meaningful only when runs can stop on the clock;
  // under pure iteration budgets they are blanked so repeated exports are
  // byte-identical.
  bool wall_timed = false;
};

// Runs the whole strategy-by-run grid, up to `workers` runs concurrently.
// Record order and all non-wall-clock fields are independent of scheduling.
ExperimentResult run_experiment(const ExperimentSpec& spec, unsigned workers);

// Maximum elapsed wall time over `runs` stall-terminated runs of LAHC with
// L = 50000, each capped at ceiling_seconds.
double calibrate_cutoff(const std::string& instance_path, ProblemKind kind,
                        std::uint32_t runs, double trap_fraction,
                        double ceiling_seconds, std::uint64_t base_seed);

enum class ExportFormat { csv, json_lines };

void export_results(std::ostream& out, const ExperimentResult& result,
                    ExportFormat format);
// Writes to a temporary file in the target directory, then renames, so a
// failure leaves no partial output behind.
void write_results_file(const std::string& path, const ExperimentResult& result,
                        ExportFormat format);
void write_trace_file(const std::string& path, const std::vector<TracePoint>& trace);
// One file per traced run: <dir>/<strategy>-L<length>-run<index>.csv
void write_trace_files(const std::string& dir, const ExperimentResult& result);

std::string strategy_label(StrategyKind kind, std::uint64_t history_length);
// Shortest decimal form that parses back to the same double; locale-free.
std::string format_double(double value);

}  // namespace dlas
