#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlas/error.hpp"
#include "dlas/fitness.hpp"
#include "dlas/rng.hpp"

namespace dlas {

// Two square matrices, row-major. `a` is the first matrix in the file and is
// indexed by raw positions; `b` by assigned positions.
struct QapInstance {
  std::string name;
  std::uint32_t n = 0;
  std::vector<Fitness> a;
  std::vector<Fitness> b;

  Fitness a_at(std::uint32_t i, std::uint32_t j) const {
    return a[static_cast<std::size_t>(i) * n + j];
  }
  Fitness b_at(std::uint32_t i, std::uint32_t j) const {
    return b[static_cast<std::size_t>(i) * n + j];
  }
};

// perm[i] is the index assigned to position i.
using Assignment = std::vector<std::uint32_t>;

// Exchanges the assignments of two distinct positions; self-inverse.
struct SwapMove {
  std::uint32_t r;
  std::uint32_t s;
};

QapInstance parse_qaplib(const std::string& text, std::string name);
QapInstance load_qaplib_file(const std::string& path);

// Sum over all position pairs of a[i][j] * b[perm[i]][perm[j]].
Fitness assignment_fitness(const QapInstance& instance, const Assignment& perm);
Assignment random_assignment(std::uint32_t n, Rng& rng);

SwapMove propose_swap(const Assignment& perm, Rng& rng);
// Exact cost change of the swap in O(n); valid for asymmetric matrices and
// nonzero diagonals.
Fitness swap_delta(const QapInstance& instance, const Assignment& perm, SwapMove move);
void apply_swap(Assignment& perm, SwapMove move);

class QapProblem {
 public:
  using Solution = Assignment;
  using Move = SwapMove;

  explicit QapProblem(const QapInstance& instance) : instance_(&instance) {
    if (instance.n < 2)
      throw ConfigError("assignment swap needs at least 2 positions");
  }

  Solution initial_solution(Rng& rng) const {
    return random_assignment(instance_->n, rng);
  }
  Fitness full_fitness(const Solution& perm) const {
    return assignment_fitness(*instance_, perm);
  }
  Move propose_move(const Solution& perm, Rng& rng) const {
    return propose_swap(perm, rng);
  }
  Fitness move_delta(const Solution& perm, const Move& move) const {
    return swap_delta(*instance_, perm, move);
  }
  void apply_move(Solution& perm, const Move& move) const {
    apply_swap(perm, move);
  }

  const QapInstance& instance() const { return *instance_; }

 private:
  const QapInstance* instance_;
};

}  // namespace dlas
