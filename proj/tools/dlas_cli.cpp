#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dlas/error.hpp"
#include "dlas/harness.hpp"
#include "dlas/qap.hpp"
#include "dlas/registry.hpp"
#include "dlas/search.hpp"
#include "dlas/tsp.hpp"

namespace {

using namespace dlas;

constexpr const char* kWorkersEnv = "DLAS_WORKERS";

struct SolveArgs {
  std::string instance_path;
  std::string kind;
  std::string strategy;
  std::uint64_t history_length = 0;  // 0: pick the default for the strategy
  std::uint64_t seed = 1;
  std::optional<double> cutoff_s;
  std::optional<std::uint64_t> iters;
  std::string trace_path;
  std::uint64_t trace_period = 1000;
};

struct BenchArgs {
  std::string spec_path;
  std::string out_path;
  std::optional<unsigned> workers;
  std::string format = "csv";
};

struct CalibrateArgs {
  std::string instance_path;
  std::string kind;
  std::uint32_t runs = 3;
  double trap_fraction = 0.10;
  double ceiling_s = 0.0;
  std::uint64_t seed = 1;
};

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

int runtime_error_exit(const std::exception& e) {
  std::cerr << "error: " << e.what() << "\n";
  return 1;
}

template <typename ProblemT>
SearchResult<typename ProblemT::Solution> solve_one(const ProblemT& problem,
                                                    const SolveArgs& args,
                                                    StrategyKind strategy,
                                                    std::uint64_t length) {
  StrategyConfig config;
  config.kind = strategy;
  config.history_length = length;
  SearchOptions options;
  options.termination.cutoff_seconds = args.cutoff_s;
  options.termination.iteration_budget = args.iters;
  options.trace_period = args.trace_path.empty() ? 0 : args.trace_period;
  return run_search(problem, config, options, args.seed);
}

int run_solve(const SolveArgs& args) {
  if (!args.cutoff_s && !args.iters)
    return usage_error("one of --cutoff-s or --iters is required");
  if (args.cutoff_s && *args.cutoff_s <= 0.0)
    return usage_error("--cutoff-s must be positive");

  const auto kind = parse_problem_kind(args.kind);
  const auto strategy = parse_strategy_kind(args.strategy);
  if (!kind) return usage_error("--kind must be tsp or qap");
  if (!strategy) return usage_error("--strategy must be one of hc, lahc, schc, dlas");
  const std::uint64_t length = args.history_length != 0
                                   ? args.history_length
                                   : default_history_length(*strategy, *kind);

  try {
    std::string name;
    Fitness best = 0;
    double time_to_last_best = 0.0;
    double hc_like_pct = 0.0;
    std::uint64_t iterations = 0;
    std::uint64_t accepted = 0;
    std::vector<TracePoint> trace;

    const auto harvest = [&](auto&& result) {
      best = result.best_fitness;
      time_to_last_best = result.time_to_last_best_s;
      hc_like_pct = result.iterations == 0
                        ? 0.0
                        : 100.0 * static_cast<double>(result.hc_like_iterations) /
                              static_cast<double>(result.iterations);
      iterations = result.iterations;
      accepted = result.accepted;
      trace = std::move(result.trace);
    };

    if (*kind == ProblemKind::tsp) {
      const TspInstance instance = load_tsplib_file(args.instance_path);
      name = instance.name.empty()
                 ? std::filesystem::path(args.instance_path).stem().string()
                 : instance.name;
      harvest(solve_one(TspProblem(instance), args, *strategy, length));
    } else {
      const QapInstance instance = load_qaplib_file(args.instance_path);
      name = instance.name;
      harvest(solve_one(QapProblem(instance), args, *strategy, length));
    }

    std::ostringstream line;
    line << "instance=" << name << " strategy=" << strategy_name(*strategy)
         << " L=" << length << " seed=" << args.seed << " best=" << best;
    if (const auto entry = best_known(name))
      line << " deviation=" << (best - entry->best_known);
    line << " time_to_last_best_s=" << format_double(time_to_last_best)
         << " hc_like_pct=" << format_double(hc_like_pct)
         << " iterations=" << iterations << " accepted=" << accepted;
    std::cout << line.str() << "\n";

    if (!args.trace_path.empty()) write_trace_file(args.trace_path, trace);
    return 0;
  } catch (const std::exception& e) {
    return runtime_error_exit(e);
  }
}

int run_bench(const BenchArgs& args) {
  unsigned workers = 1;
  if (args.workers) {
    workers = *args.workers;
  } else if (const char* env = std::getenv(kWorkersEnv)) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || value < 1)
      return usage_error(std::string(kWorkersEnv) + " must be a positive integer");
    workers = static_cast<unsigned>(value);
  }
  if (workers < 1) return usage_error("--workers must be at least 1");

  ExperimentSpec spec;
  try {
    spec = load_experiment_spec(args.spec_path);
  } catch (const ConfigError& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    return runtime_error_exit(e);
  }

  try {
    const ExperimentResult result = run_experiment(spec, workers);
    const ExportFormat format =
        args.format == "csv" ? ExportFormat::csv : ExportFormat::json_lines;
    write_results_file(args.out_path, result, format);
    if (spec.trace_period != 0)
      write_trace_files(spec.trace_dir.value_or(args.out_path + "_traces"), result);

    std::cout << "instance " << result.records.front().instance << ", "
              << result.aggregates.front().runs << " run(s) per strategy\n";
    std::cout << std::left << std::setw(10) << "strategy" << std::setw(9) << "L"
              << std::setw(16) << "mean_best" << std::setw(14) << "mean_dev"
              << std::setw(13) << "mean_ttlb_s" << std::setw(13) << "mean_hc_pct"
              << "beats\n";
    for (const AggregateRow& row : result.aggregates) {
      std::string beats;
      for (const std::string& label : row.significantly_better_than) {
        if (!beats.empty()) beats += ',';
        beats += label;
      }
      std::cout << std::left << std::setw(10) << strategy_name(row.strategy)
                << std::setw(9) << row.history_length << std::setw(16)
                << format_double(row.mean_best_fitness) << std::setw(14)
                << (row.mean_deviation ? format_double(*row.mean_deviation) : "-")
                << std::setw(13)
                << (result.wall_timed
                        ? format_double(row.mean_time_to_last_best_s)
                        : "-")
                << std::setw(13) << format_double(row.mean_hc_like_pct)
                << (beats.empty() ? "-" : beats) << "\n";
    }
    std::cout << "results written to " << args.out_path << "\n";
    return 0;
  } catch (const std::exception& e) {
    return runtime_error_exit(e);
  }
}

int run_calibrate(const CalibrateArgs& args) {
  if (args.trap_fraction <= 0.0 || args.trap_fraction >= 1.0)
    return usage_error("--trap-fraction must lie in (0, 1)");
  if (args.ceiling_s <= 0.0) return usage_error("--ceiling-s must be positive");
  if (args.runs < 1) return usage_error("--runs must be at least 1");
  const auto kind = parse_problem_kind(args.kind);
  if (!kind) return usage_error("--kind must be tsp or qap");

  try {
    const double cutoff = calibrate_cutoff(args.instance_path, *kind, args.runs,
                                           args.trap_fraction, args.ceiling_s,
                                           args.seed);
    std::cout << format_double(cutoff) << "\n";
    return 0;
  } catch (const std::exception& e) {
    return runtime_error_exit(e);
  }
}

int run_formats() {
  std::cout <<
      "instance formats\n"
      "  tsp   TSPLIB subset. Keywords NAME, TYPE, COMMENT, DIMENSION,\n"
      "        EDGE_WEIGHT_TYPE (EUC_2D or CEIL_2D), NODE_COORD_SECTION, EOF.\n"
      "        Coordinate lines are \"id x y\" with 1-based ids.\n"
      "  qap   QAPLIB plain format: n, then two n x n integer matrices\n"
      "        row-major, all whitespace-separated.\n"
      "\n"
      "strategies\n"
      "  hc    hill climbing; accepts non-worsening moves only\n"
      "  lahc  late acceptance; -L is the fitness array length\n"
      "  schc  step counting; -L is the counter limit\n"
      "  dlas  diversified late acceptance; -L is the fitness array length\n"
      "  default L: dlas 5 (tsp) or 10 (qap); lahc/schc 50000\n"
      "\n"
      "bench spec (JSON object)\n"
      "  instance         path to the instance file (required)\n"
      "  kind             \"tsp\" or \"qap\" (required)\n"
      "  strategies       array of {\"kind\": ..., \"L\": ...} (required)\n"
      "  runs             runs per strategy, default 1\n"
      "  cutoff_seconds   wall-clock limit per run\n"
      "  iteration_budget iteration limit per run (either or both limits;\n"
      "                   omitting both uses the bundled default cutoff)\n"
      "  base_seed        per-run seeds derive from this, default 1\n"
      "  best_known       overrides the bundled best-known cost\n"
      "  trace_period     trace row every N iterations (0 = off, default)\n"
      "  trace_dir        where per-run trace files go\n"
      "\n"
      "results CSV columns\n"
      "  instance,strategy,L,seed,best_fitness,deviation,time_to_last_best_s,"
      "hc_like_pct,iterations,accepted\n"
      "  aggregate lines follow, prefixed \"# aggregate\"; wall-clock columns\n"
      "  are blank when runs stop on an iteration budget alone\n"
      "\n"
      "trace CSV columns\n"
      "  iteration,elapsed_s,F,F_best\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Late-acceptance local search for TSP and QAP"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Run one search on one instance");
  solve->add_option("instance", solve_args.instance_path, "instance file")->required();
  solve->add_option("--kind", solve_args.kind, "tsp or qap")->required();
  solve->add_option("--strategy", solve_args.strategy, "hc, lahc, schc or dlas")
      ->required();
  solve->add_option("-L,--history-length", solve_args.history_length,
                    "fitness array length (lahc/dlas) or counter limit (schc)");
  solve->add_option("--seed", solve_args.seed, "rng seed")->capture_default_str();
  auto* cutoff_opt =
      solve->add_option("--cutoff-s", solve_args.cutoff_s, "wall-clock limit, seconds");
  auto* iters_opt =
      solve->add_option("--iters", solve_args.iters, "iteration limit");
  cutoff_opt->excludes(iters_opt);
  iters_opt->excludes(cutoff_opt);
  solve->add_option("--trace", solve_args.trace_path, "write a trace CSV here");
  solve->add_option("--trace-period", solve_args.trace_period,
                    "trace row every N iterations")
      ->capture_default_str();

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark spec");
  bench->add_option("spec", bench_args.spec_path, "JSON experiment spec")->required();
  bench->add_option("--out", bench_args.out_path, "results file")->required();
  bench->add_option("--workers", bench_args.workers,
                    "concurrent runs (default: $" + std::string(kWorkersEnv) +
                        " or 1)");
  bench->add_option("--format", bench_args.format, "csv or jsonl")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "jsonl"}));

  CalibrateArgs calibrate_args;
  CLI::App* calibrate = app.add_subcommand(
      "calibrate", "Estimate a wall-clock cutoff from stall-terminated runs");
  calibrate->add_option("instance", calibrate_args.instance_path, "instance file")
      ->required();
  calibrate->add_option("--kind", calibrate_args.kind, "tsp or qap")->required();
  calibrate->add_option("--runs", calibrate_args.runs, "number of runs")->capture_default_str();
  calibrate->add_option("--trap-fraction", calibrate_args.trap_fraction,
                        "stalled fraction of elapsed time that ends a run")
      ->capture_default_str();
  calibrate->add_option("--ceiling-s", calibrate_args.ceiling_s,
                        "hard per-run ceiling, seconds")
      ->required();
  calibrate->add_option("--seed", calibrate_args.seed, "rng seed")->capture_default_str();

  CLI::App* formats =
      app.add_subcommand("formats", "Describe accepted file formats and schemas");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (solve->parsed()) return run_solve(solve_args);
  if (bench->parsed()) return run_bench(bench_args);
  if (calibrate->parsed()) return run_calibrate(calibrate_args);
  if (formats->parsed()) return run_formats();
  return 2;
}
