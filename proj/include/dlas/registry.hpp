#pragma once

#include <optional>
#include <string_view>

#include "dlas/fitness.hpp"

namespace dlas {

struct BenchmarkEntry {
  Fitness best_known;
  // Reference wall-clock cutoff, in seconds, under which the bundled
  // best-known deviations were reported.
  double cutoff_seconds;
};

// Case-insensitive lookup over the bundled benchmark table (23 TSP and 24
// QAP instances). Absent names yield nullopt; callers then omit deviations.
std::optional<BenchmarkEntry> best_known(std::string_view instance_name);

}  // namespace dlas
