#include "dlas/harness.hpp"

#include <atomic>
#include <charconv>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "dlas/error.hpp"
#include "dlas/qap.hpp"
#include "dlas/registry.hpp"
#include "dlas/stats.hpp"
#include "dlas/tsp.hpp"

namespace dlas {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void spec_error(const std::string& message) {
  throw ConfigError("spec: " + message);
}

std::string file_stem(const std::string& path) {
  return fs::path(path).stem().string();
}

std::string join(const std::vector<std::string>& parts, char separator) {
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += separator;
    out += part;
  }
  return out;
}

// One immutable instance shared by every run of an experiment.
struct LoadedInstance {
  ProblemKind kind = ProblemKind::tsp;
  std::string display_name;
  std::optional<TspInstance> tsp;
  std::optional<QapInstance> qap;
};

LoadedInstance load_instance(const ExperimentSpec& spec) {
  LoadedInstance loaded;
  loaded.kind = spec.kind;
  if (spec.kind == ProblemKind::tsp) {
    loaded.tsp = load_tsplib_file(spec.instance_path);
    loaded.display_name = loaded.tsp->name.empty() ? file_stem(spec.instance_path)
                                                   : loaded.tsp->name;
  } else {
    loaded.qap = load_qaplib_file(spec.instance_path);
    loaded.display_name = loaded.qap->name;
  }
  return loaded;
}

template <typename ProblemT>
RunRecord execute_run(const ProblemT& problem, const std::string& instance_name,
                      const StrategyConfig& strategy, const Termination& termination,
                      std::uint64_t trace_period, std::uint64_t seed,
                      std::optional<Fitness> known, std::uint32_t run_index) {
  SearchOptions options;
  options.termination = termination;
  options.trace_period = trace_period;
  auto result = run_search(problem, strategy, options, seed);

  RunRecord record;
  record.instance = instance_name;
  record.strategy = strategy.kind;
  record.history_length = strategy.history_length;
  record.run_index = run_index;
  record.seed = seed;
  record.best_fitness = result.best_fitness;
  if (known) record.deviation = result.best_fitness - *known;
  record.time_to_last_best_s = result.time_to_last_best_s;
  record.hc_like_pct =
      result.iterations == 0
          ? 0.0
          : 100.0 * static_cast<double>(result.hc_like_iterations) /
                static_cast<double>(result.iterations);
  record.iterations = result.iterations;
  record.accepted = result.accepted;
  record.trace = std::move(result.trace);
  return record;
}

void export_csv(std::ostream& out, const ExperimentResult& result) {
  out << "instance,strategy,L,seed,best_fitness,deviation,time_to_last_best_s,"
         "hc_like_pct,iterations,accepted\n";
  for (const RunRecord& r : result.records) {
    out << r.instance << ',' << strategy_name(r.strategy) << ','
        << r.history_length << ',' << r.seed << ',' << r.best_fitness << ',';
    if (r.deviation) out << *r.deviation;
    out << ',';
    if (result.wall_timed) out << format_double(r.time_to_last_best_s);
    out << ',' << format_double(r.hc_like_pct) << ',' << r.iterations << ','
        << r.accepted << '\n';
  }
  for (const AggregateRow& a : result.aggregates) {
    out << "# aggregate strategy=" << strategy_name(a.strategy)
        << " L=" << a.history_length << " runs=" << a.runs
        << " mean_best_fitness=" << format_double(a.mean_best_fitness)
        << " mean_deviation="
        << (a.mean_deviation ? format_double(*a.mean_deviation) : "")
        << " mean_time_to_last_best_s="
        << (result.wall_timed ? format_double(a.mean_time_to_last_best_s) : "")
        << " mean_hc_like_pct=" << format_double(a.mean_hc_like_pct)
        << " beats=" << join(a.significantly_better_than, ';') << '\n';
  }
}

void export_json_lines(std::ostream& out, const ExperimentResult& result) {
  for (const RunRecord& r : result.records) {
    ordered_json row;
    row["type"] = "run";
    row["instance"] = r.instance;
    row["strategy"] = strategy_name(r.strategy);
    row["L"] = r.history_length;
    row["seed"] = r.seed;
    row["best_fitness"] = r.best_fitness;
    row["deviation"] = r.deviation ? ordered_json(*r.deviation) : ordered_json(nullptr);
    row["time_to_last_best_s"] = result.wall_timed
                                     ? ordered_json(r.time_to_last_best_s)
                                     : ordered_json(nullptr);
    row["hc_like_pct"] = r.hc_like_pct;
    row["iterations"] = r.iterations;
    row["accepted"] = r.accepted;
    out << row.dump() << '\n';
  }
  for (const AggregateRow& a : result.aggregates) {
    ordered_json row;
    row["type"] = "aggregate";
    row["strategy"] = strategy_name(a.strategy);
    row["L"] = a.history_length;
    row["runs"] = a.runs;
    row["mean_best_fitness"] = a.mean_best_fitness;
    row["mean_deviation"] =
        a.mean_deviation ? ordered_json(*a.mean_deviation) : ordered_json(nullptr);
    row["mean_time_to_last_best_s"] =
        result.wall_timed ? ordered_json(a.mean_time_to_last_best_s)
                          : ordered_json(nullptr);
    row["mean_hc_like_pct"] = a.mean_hc_like_pct;
    row["beats"] = a.significantly_better_than;
    out << row.dump() << '\n';
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string strategy_label(StrategyKind kind, std::uint64_t history_length) {
  return std::string(strategy_name(kind)) + "-L" + std::to_string(history_length);
}

std::uint64_t default_history_length(StrategyKind strategy, ProblemKind problem) {
  switch (strategy) {
    case StrategyKind::hc:
      return 1;
    case StrategyKind::lahc:
    case StrategyKind::schc:
      return 50000;
    case StrategyKind::dlas:
      return problem == ProblemKind::tsp ? 5 : 10;
  }
  return 1;
}

ExperimentSpec load_experiment_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open \"" + path + "\"");

  json root;
  try {
    root = json::parse(in);
  } catch (const json::exception& e) {
    spec_error(std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) spec_error("top level must be an object");

  static const std::set<std::string> known_fields = {
      "instance", "kind",      "strategies",  "runs",      "cutoff_seconds",
      "iteration_budget",      "base_seed",   "best_known", "trace_period",
      "trace_dir"};
  for (const auto& item : root.items())
    if (!known_fields.count(item.key()))
      spec_error("field \"" + item.key() + "\" is not recognized");

  ExperimentSpec spec;

  if (!root.contains("instance") || !root["instance"].is_string())
    spec_error("field \"instance\" must be a string path");
  spec.instance_path = root["instance"].get<std::string>();

  if (!root.contains("kind") || !root["kind"].is_string())
    spec_error("field \"kind\" must be \"tsp\" or \"qap\"");
  const auto kind = parse_problem_kind(root["kind"].get<std::string>());
  if (!kind) spec_error("field \"kind\" must be \"tsp\" or \"qap\"");
  spec.kind = *kind;

  if (!root.contains("strategies") || !root["strategies"].is_array() ||
      root["strategies"].empty())
    spec_error("field \"strategies\" must be a non-empty array");
  for (const json& entry : root["strategies"]) {
    if (!entry.is_object()) spec_error("each strategy must be an object");
    for (const auto& item : entry.items())
      if (item.key() != "kind" && item.key() != "L")
        spec_error("strategy field \"" + item.key() + "\" is not recognized");
    if (!entry.contains("kind") || !entry["kind"].is_string())
      spec_error("strategy field \"kind\" must be one of hc, lahc, schc, dlas");
    const auto strategy = parse_strategy_kind(entry["kind"].get<std::string>());
    if (!strategy)
      spec_error("strategy field \"kind\" must be one of hc, lahc, schc, dlas");
    StrategyConfig config;
    config.kind = *strategy;
    if (entry.contains("L")) {
      if (!entry["L"].is_number_unsigned() || entry["L"].get<std::uint64_t>() < 1)
        spec_error("strategy field \"L\" must be a positive integer");
      config.history_length = entry["L"].get<std::uint64_t>();
    } else {
      config.history_length = default_history_length(config.kind, spec.kind);
    }
    spec.strategies.push_back(config);
  }

  if (root.contains("runs")) {
    if (!root["runs"].is_number_unsigned() || root["runs"].get<std::uint64_t>() < 1)
      spec_error("field \"runs\" must be a positive integer");
    spec.runs_per_config = root["runs"].get<std::uint32_t>();
  }
  if (root.contains("cutoff_seconds")) {
    if (!root["cutoff_seconds"].is_number() ||
        root["cutoff_seconds"].get<double>() <= 0.0)
      spec_error("field \"cutoff_seconds\" must be a positive number");
    spec.cutoff_seconds = root["cutoff_seconds"].get<double>();
  }
  if (root.contains("iteration_budget")) {
    if (!root["iteration_budget"].is_number_unsigned())
      spec_error("field \"iteration_budget\" must be a non-negative integer");
    spec.iteration_budget = root["iteration_budget"].get<std::uint64_t>();
  }
  if (root.contains("base_seed")) {
    if (!root["base_seed"].is_number_unsigned())
      spec_error("field \"base_seed\" must be a non-negative integer");
    spec.base_seed = root["base_seed"].get<std::uint64_t>();
  }
  if (root.contains("best_known")) {
    if (!root["best_known"].is_number_integer())
      spec_error("field \"best_known\" must be an integer");
    spec.best_known_override = root["best_known"].get<Fitness>();
  }
  if (root.contains("trace_period")) {
    if (!root["trace_period"].is_number_unsigned())
      spec_error("field \"trace_period\" must be a non-negative integer");
    spec.trace_period = root["trace_period"].get<std::uint64_t>();
  }
  if (root.contains("trace_dir")) {
    if (!root["trace_dir"].is_string())
      spec_error("field \"trace_dir\" must be a string path");
    spec.trace_dir = root["trace_dir"].get<std::string>();
  }
  return spec;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, unsigned workers) {
  if (spec.strategies.empty())
    throw ConfigError("experiment needs at least one strategy");
  if (spec.runs_per_config < 1)
    throw ConfigError("runs_per_config must be at least 1");
  for (const StrategyConfig& s : spec.strategies)
    if (s.history_length < 1)
      throw ConfigError("history length must be at least 1");

  const LoadedInstance loaded = load_instance(spec);

  Termination termination;
  termination.cutoff_seconds = spec.cutoff_seconds;
  termination.iteration_budget = spec.iteration_budget;
  if (!termination.cutoff_seconds && !termination.iteration_budget) {
    // Fall back to the cutoff under which the bundled baselines were run.
    const auto entry = best_known(loaded.display_name);
    if (!entry)
      throw ConfigError(
          "no cutoff or iteration budget given, and no bundled default cutoff "
          "for \"" + loaded.display_name + "\"");
    termination.cutoff_seconds = entry->cutoff_seconds;
  }

  std::optional<Fitness> known = spec.best_known_override;
  if (!known)
    if (const auto entry = best_known(loaded.display_name))
      known = entry->best_known;

  const std::size_t total =
      spec.strategies.size() * static_cast<std::size_t>(spec.runs_per_config);
  ExperimentResult out;
  out.wall_timed = termination.cutoff_seconds.has_value();
  out.records.resize(total);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  const auto work = [&] {
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= total || failed.load()) return;
      try {
        const std::size_t strategy_index = index / spec.runs_per_config;
        const auto run_index =
            static_cast<std::uint32_t>(index % spec.runs_per_config);
        const std::uint64_t seed = derive_run_seed(spec.base_seed, index);
        const StrategyConfig& strategy = spec.strategies[strategy_index];
        out.records[index] =
            loaded.kind == ProblemKind::tsp
                ? execute_run(TspProblem(*loaded.tsp), loaded.display_name,
                              strategy, termination, spec.trace_period, seed,
                              known, run_index)
                : execute_run(QapProblem(*loaded.qap), loaded.display_name,
                              strategy, termination, spec.trace_period, seed,
                              known, run_index);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  const unsigned thread_count = std::max<unsigned>(
      1, std::min<unsigned>(workers, static_cast<unsigned>(total)));
  if (thread_count == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(work);
    for (std::thread& thread : pool) thread.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::vector<std::vector<double>> best_samples(spec.strategies.size());
  for (std::size_t s = 0; s < spec.strategies.size(); ++s) {
    AggregateRow row;
    row.strategy = spec.strategies[s].kind;
    row.history_length = spec.strategies[s].history_length;
    row.runs = spec.runs_per_config;
    double sum_best = 0.0;
    double sum_dev = 0.0;
    double sum_time = 0.0;
    double sum_hc = 0.0;
    for (std::uint32_t r = 0; r < spec.runs_per_config; ++r) {
      const RunRecord& record = out.records[s * spec.runs_per_config + r];
      sum_best += static_cast<double>(record.best_fitness);
      if (record.deviation) sum_dev += static_cast<double>(*record.deviation);
      sum_time += record.time_to_last_best_s;
      sum_hc += record.hc_like_pct;
      best_samples[s].push_back(static_cast<double>(record.best_fitness));
    }
    const double runs = spec.runs_per_config;
    row.mean_best_fitness = sum_best / runs;
    if (known) row.mean_deviation = sum_dev / runs;
    row.mean_time_to_last_best_s = sum_time / runs;
    row.mean_hc_like_pct = sum_hc / runs;
    out.aggregates.push_back(row);
  }

  // A strategy "beats" another when its mean best cost is lower and the
  // difference is significant at 0.95. Single-run experiments skip the test.
  if (spec.runs_per_config >= 2) {
    for (std::size_t i = 0; i < out.aggregates.size(); ++i)
      for (std::size_t j = 0; j < out.aggregates.size(); ++j) {
        if (i == j) continue;
        if (out.aggregates[i].mean_best_fitness >=
            out.aggregates[j].mean_best_fitness)
          continue;
        if (welch_t_test(best_samples[i], best_samples[j], 0.95).significant)
          out.aggregates[i].significantly_better_than.push_back(strategy_label(
              out.aggregates[j].strategy, out.aggregates[j].history_length));
      }
  }
  return out;
}

double calibrate_cutoff(const std::string& instance_path, ProblemKind kind,
                        std::uint32_t runs, double trap_fraction,
                        double ceiling_seconds, std::uint64_t base_seed) {
  if (runs < 1) throw ConfigError("calibration needs at least one run");
  if (trap_fraction <= 0.0 || trap_fraction >= 1.0)
    throw ConfigError("trap fraction must lie in (0, 1)");
  if (ceiling_seconds <= 0.0) throw ConfigError("ceiling must be positive");

  StrategyConfig lahc;
  lahc.kind = StrategyKind::lahc;
  lahc.history_length = 50000;
  SearchOptions options;
  options.termination.cutoff_seconds = ceiling_seconds;
  options.termination.stall_fraction = trap_fraction;

  double longest = 0.0;
  const auto measure = [&](const auto& problem) {
    for (std::uint32_t r = 0; r < runs; ++r) {
      const auto result =
          run_search(problem, lahc, options, derive_run_seed(base_seed, r));
      longest = std::max(longest, result.elapsed_s);
    }
  };
  if (kind == ProblemKind::tsp) {
    const TspInstance instance = load_tsplib_file(instance_path);
    measure(TspProblem(instance));
  } else {
    const QapInstance instance = load_qaplib_file(instance_path);
    measure(QapProblem(instance));
  }
  return longest;
}

void export_results(std::ostream& out, const ExperimentResult& result,
                    ExportFormat format) {
  if (format == ExportFormat::csv)
    export_csv(out, result);
  else
    export_json_lines(out, result);
}

void write_results_file(const std::string& path, const ExperimentResult& result,
                        ExportFormat format) {
  const fs::path target(path);
  fs::path tmp(target);
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open \"" + tmp.string() + "\" for writing");
    export_results(out, result, format);
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write failed for \"" + tmp.string() + "\"");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot move results into \"" + path + "\": " + ec.message());
  }
}

void write_trace_file(const std::string& path, const std::vector<TracePoint>& trace) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open \"" + path + "\" for writing");
  out << "iteration,elapsed_s,F,F_best\n";
  for (const TracePoint& point : trace)
    out << point.iteration << ',' << format_double(point.elapsed_s) << ','
        << point.current << ',' << point.best << '\n';
  out.flush();
  if (!out) throw IoError("write failed for \"" + path + "\"");
}

void write_trace_files(const std::string& dir, const ExperimentResult& result) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create \"" + dir + "\": " + ec.message());
  for (const RunRecord& record : result.records) {
    if (record.trace.empty()) continue;
    const fs::path path =
        fs::path(dir) / (strategy_label(record.strategy, record.history_length) +
                         "-run" + std::to_string(record.run_index) + ".csv");
    write_trace_file(path.string(), record.trace);
  }
}

}  // namespace dlas
