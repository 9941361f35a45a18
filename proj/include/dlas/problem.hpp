#pragma once

#include <concepts>

#include "dlas/fitness.hpp"
#include "dlas/rng.hpp"

namespace dlas {

// Contract between the search loop and a problem backend. This is the
// library's extension point and is kept stable.
//
// Requirements beyond the signatures:
//  - full_fitness after apply_move(s, m) equals full_fitness(s) plus
//    move_delta(s, m), exactly, for every move propose_move can return.
//  - propose_move and move_delta leave the solution untouched; only
//    apply_move mutates. Rejected moves are simply dropped, never undone.
//  - Solutions are value types: copyable (the loop snapshots the best) and
//    independent once copied.
//  - A backend whose instance is below the move operator's minimum size
//    reports that at construction, before any search starts.
template <typename P>
concept Problem = requires(const P& problem, typename P::Solution& solution,
                           const typename P::Solution& const_solution,
                           const typename P::Move& move, Rng& rng) {
  typename P::Solution;
  typename P::Move;
  { problem.initial_solution(rng) } -> std::same_as<typename P::Solution>;
  { problem.full_fitness(const_solution) } -> std::same_as<Fitness>;
  { problem.propose_move(const_solution, rng) } -> std::same_as<typename P::Move>;
  { problem.move_delta(const_solution, move) } -> std::same_as<Fitness>;
  { problem.apply_move(solution, move) };
};

}  // namespace dlas
