#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "dlas/error.hpp"
#include "dlas/fitness.hpp"
#include "dlas/rng.hpp"

namespace dlas {

enum class EdgeWeight { euc_2d, ceil_2d };

// Planar instance; distances derive from coordinates on demand. No distance
// matrix is kept: at the sizes this library targets, the n^2 table would
// dwarf the instance itself.
struct TspInstance {
  std::string name;
  EdgeWeight edge_weight = EdgeWeight::euc_2d;
  std::vector<double> x;
  std::vector<double> y;

  std::uint32_t size() const { return static_cast<std::uint32_t>(x.size()); }

  // Nearest-integer rounding for EUC_2D, ceiling for CEIL_2D: the
  // conventions under which the published best tour lengths were computed.
  Fitness distance(std::uint32_t a, std::uint32_t b) const {
    const double dx = x[a] - x[b];
    const double dy = y[a] - y[b];
    const double d = std::sqrt(dx * dx + dy * dy);
    return edge_weight == EdgeWeight::euc_2d ? static_cast<Fitness>(d + 0.5)
                                             : static_cast<Fitness>(std::ceil(d));
  }
};

// order[p] is the city visited at position p; the tour closes cyclically.
using Tour = std::vector<std::uint32_t>;

// Reverses the segment order[i+1 .. j], with cut positions 0 <= i < j < n.
// Reversing the complementary (wrapping) segment yields the same cyclic edge
// set, so moves are normalized to this non-wrapping form.
struct ReversalMove {
  std::uint32_t i;
  std::uint32_t j;
};

TspInstance parse_tsplib(const std::string& text);
std::string serialize_tsplib(const TspInstance& instance);
TspInstance load_tsplib_file(const std::string& path);

Fitness tour_fitness(const TspInstance& instance, const Tour& tour);
Tour random_tour(std::uint32_t n, Rng& rng);

// Cut pair drawn uniformly over all i < j; degenerate pairs that leave the
// cyclic edge set unchanged are permitted and cost delta 0.
ReversalMove propose_reversal(const Tour& tour, Rng& rng);
Fitness reversal_delta(const TspInstance& instance, const Tour& tour, ReversalMove move);
void apply_reversal(Tour& tour, ReversalMove move);

class TspProblem {
 public:
  using Solution = Tour;
  using Move = ReversalMove;

  explicit TspProblem(const TspInstance& instance) : instance_(&instance) {
    if (instance.size() < 4)
      throw ConfigError("tour reversal needs at least 4 cities");
  }

  Solution initial_solution(Rng& rng) const {
    return random_tour(instance_->size(), rng);
  }
  Fitness full_fitness(const Solution& tour) const {
    return tour_fitness(*instance_, tour);
  }
  Move propose_move(const Solution& tour, Rng& rng) const {
    return propose_reversal(tour, rng);
  }
  Fitness move_delta(const Solution& tour, const Move& move) const {
    return reversal_delta(*instance_, tour, move);
  }
  void apply_move(Solution& tour, const Move& move) const {
    apply_reversal(tour, move);
  }

  const TspInstance& instance() const { return *instance_; }

 private:
  const TspInstance* instance_;
};

}  // namespace dlas
