#pragma once

#include <vector>

namespace dlas {

struct WelchResult {
  double t = 0.0;
  double degrees_of_freedom = 0.0;
  double p_value = 1.0;
  bool significant = false;
};

// Unequal-variance two-sample t-test, two-sided, with Welch-Satterthwaite
// degrees of freedom. `confidence` lies in (0, 1), e.g. 0.95. Samples of
// size < 2 are rejected. When both samples have zero variance the statistic
// is undefined; the pair is then compared by mean inequality.
WelchResult welch_t_test(const std::vector<double>& a,
                         const std::vector<double>& b, double confidence);

}  // namespace dlas
