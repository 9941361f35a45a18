#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "dlas/fitness.hpp"

namespace dlas {

enum class StrategyKind { hc, lahc, schc, dlas };

inline const char* strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::hc: return "hc";
    case StrategyKind::lahc: return "lahc";
    case StrategyKind::schc: return "schc";
    case StrategyKind::dlas: return "dlas";
  }
  return "?";
}

inline std::optional<StrategyKind> parse_strategy_kind(std::string_view name) {
  if (name == "hc") return StrategyKind::hc;
  if (name == "lahc") return StrategyKind::lahc;
  if (name == "schc") return StrategyKind::schc;
  if (name == "dlas") return StrategyKind::dlas;
  return std::nullopt;
}

struct StrategyConfig {
  StrategyKind kind = StrategyKind::dlas;
  // History length for LAHC/DLAS, step counter limit for SCHC; HC ignores
  // it. Must be >= 1.
  std::uint64_t history_length = 1;
};

// Acceptance rules (minimization).

constexpr bool hc_accept(Fitness candidate, Fitness current) {
  return candidate <= current;
}

constexpr bool lahc_accept(Fitness candidate, Fitness current, Fitness slot) {
  return candidate <= current || candidate < slot;
}

// Sideways moves pass even at the array maximum; strictly worse candidates
// only below it.
constexpr bool dlas_accept(Fitness candidate, Fitness current, Fitness array_max) {
  return candidate == current || candidate < array_max;
}

constexpr bool schc_accept(Fitness candidate, Fitness current, Fitness bound) {
  return candidate <= current || candidate < bound;
}

// History updates, applied once per iteration after acceptance has resolved,
// with `current` the resulting fitness.

inline void lahc_replace(FitnessArray& history, std::size_t slot, Fitness current) {
  if (current < history[slot]) history.lower_slot(slot, current);
}

// A slot is overwritten upward whenever the current fitness rose above it,
// and downward only on an improving step (current < previous). A stagnant
// current never spreads through the array; that is what keeps the history
// diverse.
constexpr bool dlas_replace_decision(Fitness current, Fitness previous, Fitness slot) {
  return current > slot || (current < slot && current < previous);
}

inline void dlas_apply_replacement(FitnessArray& history, std::size_t slot,
                                   Fitness current, Fitness previous) {
  if (current > history[slot]) {
    history.raise_slot(slot, current);
  } else if (current < history[slot] && current < previous) {
    history.lower_slot(slot, current);
  }
}

// The step-counting bound refreshes once the count of completed iterations
// is a whole number of counter periods.
constexpr bool schc_bound_refresh_due(std::uint64_t completed_iterations,
                                      std::uint64_t counter_limit) {
  return completed_iterations % counter_limit == 0;
}

// An iteration is HC-like when the strategy's worsening-acceptance threshold
// has sunk to the best fitness found so far: nothing worse than the
// incumbent best can be accepted any more. HC is HC-like by construction.
constexpr bool hc_like_flag(StrategyKind kind, Fitness threshold, Fitness best) {
  return kind == StrategyKind::hc || threshold == best;
}

// Per-strategy loop state. All four expose the same shape so the search loop
// instantiates statically: begin_iteration captures what the strategy needs
// from the pre-move state, accept decides, end_iteration updates the history
// or bound with the post-acceptance fitness.

class HcPolicy {
 public:
  static constexpr StrategyKind kind = StrategyKind::hc;
  HcPolicy(std::uint64_t, Fitness) {}
  void begin_iteration(Fitness) {}
  bool accept(std::uint64_t, Fitness candidate, Fitness current) const {
    return hc_accept(candidate, current);
  }
  void end_iteration(std::uint64_t, Fitness) {}
  bool hc_like(Fitness) const { return true; }
};

class LahcPolicy {
 public:
  static constexpr StrategyKind kind = StrategyKind::lahc;
  LahcPolicy(std::uint64_t length, Fitness f0) : history_(length, f0) {}
  void begin_iteration(Fitness) {}
  bool accept(std::uint64_t k, Fitness candidate, Fitness current) const {
    return lahc_accept(candidate, current, history_[k % history_.size()]);
  }
  void end_iteration(std::uint64_t k, Fitness current) {
    lahc_replace(history_, k % history_.size(), current);
  }
  bool hc_like(Fitness best) const {
    return hc_like_flag(kind, history_.max_value(), best);
  }
  const FitnessArray& history() const { return history_; }

 private:
  FitnessArray history_;
};

class SchcPolicy {
 public:
  static constexpr StrategyKind kind = StrategyKind::schc;
  SchcPolicy(std::uint64_t counter_limit, Fitness f0)
      : counter_limit_(counter_limit), bound_(f0) {}
  void begin_iteration(Fitness) {}
  bool accept(std::uint64_t, Fitness candidate, Fitness current) const {
    return schc_accept(candidate, current, bound_);
  }
  void end_iteration(std::uint64_t k, Fitness current) {
    if (schc_bound_refresh_due(k + 1, counter_limit_)) bound_ = current;
  }
  bool hc_like(Fitness best) const { return hc_like_flag(kind, bound_, best); }
  Fitness bound() const { return bound_; }

 private:
  std::uint64_t counter_limit_;
  Fitness bound_;
};

class DlasPolicy {
 public:
  static constexpr StrategyKind kind = StrategyKind::dlas;
  DlasPolicy(std::uint64_t length, Fitness f0)
      : history_(length, f0), previous_(f0) {}
  void begin_iteration(Fitness current) { previous_ = current; }
  bool accept(std::uint64_t, Fitness candidate, Fitness current) const {
    return dlas_accept(candidate, current, history_.max_value());
  }
  void end_iteration(std::uint64_t k, Fitness current) {
    dlas_apply_replacement(history_, k % history_.size(), current, previous_);
  }
  bool hc_like(Fitness best) const {
    return hc_like_flag(kind, history_.max_value(), best);
  }
  const FitnessArray& history() const { return history_; }

 private:
  FitnessArray history_;
  Fitness previous_;
};

}  // namespace dlas
