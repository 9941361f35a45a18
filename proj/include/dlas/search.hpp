#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "dlas/error.hpp"
#include "dlas/fitness.hpp"
#include "dlas/problem.hpp"
#include "dlas/rng.hpp"
#include "dlas/strategy.hpp"

namespace dlas {

struct Termination {
  // Wall-clock limit in seconds; must be positive when present.
  std::optional<double> cutoff_seconds;
  // Iteration limit; zero is legal and evaluates nothing. When both limits
  // are present, whichever is reached first stops the run.
  std::optional<std::uint64_t> iteration_budget;
  // Extra stop used by cutoff calibration: end the run once the time since
  // the last best-fitness improvement exceeds this fraction of the total
  // elapsed time. Requires cutoff_seconds as a hard ceiling.
  std::optional<double> stall_fraction;
};

struct SearchOptions {
  Termination termination;
  // Record a trace point every trace_period iterations plus at every new
  // best; zero disables tracing.
  std::uint64_t trace_period = 0;
};

struct TracePoint {
  std::uint64_t iteration;
  double elapsed_s;
  Fitness current;
  Fitness best;
};

template <typename Solution>
struct SearchResult {
  Solution best_solution;
  Fitness best_fitness;
  Fitness initial_fitness;
  std::uint64_t iterations = 0;
  std::uint64_t accepted = 0;
  std::uint64_t hc_like_iterations = 0;
  double time_to_last_best_s = 0.0;  // wall clock; excluded from determinism
  double elapsed_s = 0.0;            // likewise
  std::vector<TracePoint> trace;
};

namespace detail {

struct NoInspector {};

// Wall-clock reads are batched: frequent enough for tight cutoff adherence,
// rare enough not to dominate cheap-neighborhood iterations.
inline constexpr std::uint64_t kClockStride = 64;

inline void validate(const Termination& t) {
  if (!t.cutoff_seconds && !t.iteration_budget)
    throw ConfigError("termination needs a cutoff, an iteration budget, or both");
  if (t.cutoff_seconds && *t.cutoff_seconds <= 0.0)
    throw ConfigError("cutoff must be positive");
  if (t.stall_fraction) {
    if (*t.stall_fraction <= 0.0 || *t.stall_fraction >= 1.0)
      throw ConfigError("stall fraction must lie in (0, 1)");
    if (!t.cutoff_seconds)
      throw ConfigError("stall termination needs a cutoff as its ceiling");
  }
}

template <typename Policy, typename P, typename Inspector>
SearchResult<typename P::Solution> search_loop(const P& problem,
                                               std::uint64_t history_length,
                                               const SearchOptions& options,
                                               std::uint64_t seed,
                                               Inspector&& inspect) {
  using clock = std::chrono::steady_clock;
  validate(options.termination);

  const auto started = clock::now();
  const auto elapsed_s = [&started] {
    return std::chrono::duration<double>(clock::now() - started).count();
  };

  Rng rng(seed);
  typename P::Solution current = problem.initial_solution(rng);
  Fitness f = problem.full_fitness(current);
  Policy policy(history_length, f);

  SearchResult<typename P::Solution> result;
  result.best_solution = current;
  result.best_fitness = f;
  result.initial_fitness = f;
  Fitness best = f;

  const std::uint64_t budget = options.termination.iteration_budget.value_or(
      std::numeric_limits<std::uint64_t>::max());
  const bool timed = options.termination.cutoff_seconds.has_value();
  const double cutoff = options.termination.cutoff_seconds.value_or(0.0);
  const double stall = options.termination.stall_fraction.value_or(0.0);

  std::uint64_t k = 0;
  while (k < budget) {
    if (timed && k % kClockStride == 0) {
      const double now = elapsed_s();
      if (now >= cutoff) break;
      if (stall > 0.0 && k > 0 && now - result.time_to_last_best_s >= stall * now)
        break;
    }

    policy.begin_iteration(f);
    const typename P::Move move = problem.propose_move(current, rng);
    const Fitness candidate = f + problem.move_delta(current, move);

    bool new_best = false;
    if (policy.accept(k, candidate, f)) {
      problem.apply_move(current, move);
      f = candidate;
      ++result.accepted;
      if (f < best) {
        best = f;
        result.best_solution = current;
        result.time_to_last_best_s = elapsed_s();
        new_best = true;
      }
    }
    policy.end_iteration(k, f);
    if (policy.hc_like(best)) ++result.hc_like_iterations;

    if (options.trace_period != 0 && (new_best || k % options.trace_period == 0))
      result.trace.push_back({k, elapsed_s(), f, best});
    if constexpr (std::is_invocable_v<Inspector&, std::uint64_t, Fitness, Fitness,
                                      const Policy&>)
      inspect(k, f, best, policy);
    ++k;
  }

  result.best_fitness = best;
  result.iterations = k;
  result.elapsed_s = elapsed_s();
  return result;
}

}  // namespace detail

// Executes one single-threaded search run. The inspector, when invocable as
// inspect(iteration, current, best, policy), is called after every completed
// iteration; tests use it to audit per-iteration invariants.
template <Problem P, typename Inspector = detail::NoInspector>
SearchResult<typename P::Solution> run_search(const P& problem,
                                              const StrategyConfig& strategy,
                                              const SearchOptions& options,
                                              std::uint64_t seed,
                                              Inspector&& inspect = {}) {
  if (strategy.history_length < 1)
    throw ConfigError("history length must be at least 1");
  switch (strategy.kind) {
    case StrategyKind::hc:
      return detail::search_loop<HcPolicy>(problem, strategy.history_length,
                                           options, seed, inspect);
    case StrategyKind::lahc:
      return detail::search_loop<LahcPolicy>(problem, strategy.history_length,
                                             options, seed, inspect);
    case StrategyKind::schc:
      return detail::search_loop<SchcPolicy>(problem, strategy.history_length,
                                             options, seed, inspect);
    case StrategyKind::dlas:
      return detail::search_loop<DlasPolicy>(problem, strategy.history_length,
                                             options, seed, inspect);
  }
  throw ConfigError("unknown strategy kind");
}

}  // namespace dlas
