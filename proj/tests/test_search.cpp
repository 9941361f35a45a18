#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "dlas/error.hpp"
#include "dlas/rng.hpp"
#include "dlas/search.hpp"
#include "dlas/strategy.hpp"
#include "dlas/tsp.hpp"
#include "doctest.h"

using namespace dlas;

namespace {

TspInstance random_instance(std::uint32_t n, std::uint64_t seed) {
  TspInstance instance;
  instance.name = "random" + std::to_string(n);
  instance.edge_weight = EdgeWeight::euc_2d;
  Rng rng(seed);
  for (std::uint32_t i = 0; i < n; ++i) {
    instance.x.push_back(static_cast<double>(rng.below(10000)));
    instance.y.push_back(static_cast<double>(rng.below(10000)));
  }
  return instance;
}

SearchOptions budget_options(std::uint64_t iterations) {
  SearchOptions options;
  options.termination.iteration_budget = iterations;
  return options;
}

}  // namespace

TEST_CASE("a zero budget evaluates nothing") {
  const TspInstance instance = random_instance(8, 1);
  const TspProblem problem(instance);
  const auto result =
      run_search(problem, {StrategyKind::dlas, 5}, budget_options(0), 42);
  CHECK(result.iterations == 0);
  CHECK(result.accepted == 0);
  CHECK(result.best_fitness == result.initial_fitness);
  CHECK(tour_fitness(instance, result.best_solution) == result.best_fitness);
}

TEST_CASE("an iteration budget is honored exactly") {
  const TspInstance instance = random_instance(8, 1);
  const TspProblem problem(instance);
  const auto result =
      run_search(problem, {StrategyKind::dlas, 5}, budget_options(12345), 42);
  CHECK(result.iterations == 12345);
  CHECK(result.accepted <= result.iterations);
}

TEST_CASE("equal seeds reproduce a run exactly") {
  const TspInstance instance = random_instance(6, 3);
  const TspProblem problem(instance);
  for (StrategyKind kind : {StrategyKind::lahc, StrategyKind::dlas}) {
    const StrategyConfig strategy{kind, kind == StrategyKind::lahc ? 1u : 5u};
    const auto first = run_search(problem, strategy, budget_options(100000), 99);
    const auto second = run_search(problem, strategy, budget_options(100000), 99);
    CHECK(first.best_fitness == second.best_fitness);
    CHECK(first.best_solution == second.best_solution);
    CHECK(first.iterations == second.iterations);
    CHECK(first.accepted == second.accepted);
    CHECK(first.hc_like_iterations == second.hc_like_iterations);
  }
}

TEST_CASE("the cached fitness and the best stay exact for every strategy") {
  const TspInstance instance = random_instance(12, 7);
  const TspProblem problem(instance);
  for (StrategyKind kind : {StrategyKind::hc, StrategyKind::lahc,
                            StrategyKind::schc, StrategyKind::dlas}) {
    CAPTURE(strategy_name(kind));
    Fitness last_best = 0;
    bool first_iteration = true;
    std::uint64_t audited = 0;
    const auto inspect = [&](std::uint64_t, Fitness current, Fitness best,
                             const auto& policy) {
      // The incumbent never loses to the best seen so far.
      REQUIRE(best <= current);
      if (!first_iteration) REQUIRE(best <= last_best);
      // Late-acceptance histories never sink below the incumbent.
      if constexpr (requires { policy.history(); })
        REQUIRE(current <= policy.history().max_value());
      last_best = best;
      first_iteration = false;
      ++audited;
    };
    const auto result =
        run_search(problem, {kind, 10}, budget_options(30000), 5, inspect);
    CHECK(audited == result.iterations);
    CHECK(result.iterations == 30000);
    CHECK(result.best_fitness == last_best);
    CHECK(result.best_fitness <= result.initial_fitness);
    CHECK(tour_fitness(instance, result.best_solution) == result.best_fitness);
    CHECK(result.hc_like_iterations <= result.iterations);
    if (kind == StrategyKind::hc)
      CHECK(result.hc_like_iterations == result.iterations);
  }
}

TEST_CASE("hill climbing never accepts a worsening move") {
  const TspInstance instance = random_instance(10, 11);
  const TspProblem problem(instance);
  Fitness previous = 0;
  bool first_iteration = true;
  const auto inspect = [&](std::uint64_t, Fitness current, Fitness,
                           const auto&) {
    if (!first_iteration) REQUIRE(current <= previous);
    previous = current;
    first_iteration = false;
  };
  const auto result =
      run_search(problem, {StrategyKind::hc, 1}, budget_options(20000), 8, inspect);
  CHECK(result.best_fitness <= result.initial_fitness);
}

TEST_CASE("trace rows are periodic or strict improvements") {
  const TspInstance instance = random_instance(10, 2);
  const TspProblem problem(instance);
  SearchOptions options = budget_options(10000);
  options.trace_period = 1000;
  const auto result = run_search(problem, {StrategyKind::dlas, 5}, options, 21);

  REQUIRE(!result.trace.empty());
  CHECK(result.trace.front().iteration == 0);
  std::set<std::uint64_t> periodic;
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    const TracePoint& row = result.trace[i];
    if (row.iteration % 1000 == 0) {
      CHECK(periodic.insert(row.iteration).second);
    } else {
      // Improvements are the only other trigger, and every improvement is
      // traced, so the best strictly drops between consecutive rows.
      REQUIRE(i > 0);
      CHECK(row.best < result.trace[i - 1].best);
    }
    CHECK(row.best <= row.current);
  }
  CHECK(periodic.size() == 10);
}

TEST_CASE("tracing disabled leaves the trace empty") {
  const TspInstance instance = random_instance(8, 2);
  const TspProblem problem(instance);
  const auto result =
      run_search(problem, {StrategyKind::lahc, 5}, budget_options(5000), 3);
  CHECK(result.trace.empty());
}

TEST_CASE("termination settings are validated") {
  const TspInstance instance = random_instance(8, 1);
  const TspProblem problem(instance);
  const StrategyConfig strategy{StrategyKind::dlas, 5};

  SearchOptions unlimited;
  CHECK_THROWS_AS(run_search(problem, strategy, unlimited, 1), ConfigError);

  SearchOptions negative_cutoff;
  negative_cutoff.termination.cutoff_seconds = -1.0;
  CHECK_THROWS_AS(run_search(problem, strategy, negative_cutoff, 1), ConfigError);

  SearchOptions stall_without_ceiling;
  stall_without_ceiling.termination.iteration_budget = 100;
  stall_without_ceiling.termination.stall_fraction = 0.5;
  CHECK_THROWS_AS(run_search(problem, strategy, stall_without_ceiling, 1),
                  ConfigError);

  SearchOptions stall_out_of_range;
  stall_out_of_range.termination.cutoff_seconds = 1.0;
  stall_out_of_range.termination.stall_fraction = 1.5;
  CHECK_THROWS_AS(run_search(problem, strategy, stall_out_of_range, 1),
                  ConfigError);
}

TEST_CASE("a zero history length is rejected") {
  const TspInstance instance = random_instance(8, 1);
  const TspProblem problem(instance);
  CHECK_THROWS_AS(
      run_search(problem, {StrategyKind::lahc, 0}, budget_options(10), 1),
      ConfigError);
}

TEST_CASE("tiny tours are rejected before the loop starts") {
  const TspInstance instance = random_instance(3, 1);
  CHECK_THROWS_AS(TspProblem{instance}, ConfigError);
}

TEST_CASE("stall termination ends a stagnant run early") {
  const TspInstance instance = random_instance(8, 4);
  const TspProblem problem(instance);
  SearchOptions options;
  options.termination.cutoff_seconds = 30.0;
  options.termination.stall_fraction = 0.3;
  const auto result = run_search(problem, {StrategyKind::lahc, 5}, options, 6);
  // An 8-city neighborhood is exhausted almost immediately; the stall stop
  // must fire long before the ceiling.
  CHECK(result.iterations > 0);
  CHECK(result.elapsed_s < 10.0);
}
