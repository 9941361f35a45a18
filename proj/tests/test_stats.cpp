#include <cmath>
#include <vector>

#include "dlas/error.hpp"
#include "dlas/stats.hpp"
#include "doctest.h"

using namespace dlas;

TEST_CASE("identical samples are never significant") {
  const std::vector<double> sample = {4.0, 5.0, 6.0, 7.0};
  const WelchResult r = welch_t_test(sample, sample, 0.95);
  CHECK(r.t == doctest::Approx(0.0));
  CHECK_FALSE(r.significant);
  CHECK(r.p_value > 0.9);
}

TEST_CASE("clearly separated samples are significant") {
  const std::vector<double> a = {1, 2, 3, 4, 5};
  const std::vector<double> b = {11, 12, 13, 14, 15};
  const WelchResult r = welch_t_test(a, b, 0.95);
  CHECK(r.t == doctest::Approx(-10.0));
  CHECK(r.degrees_of_freedom == doctest::Approx(8.0));
  CHECK(r.significant);
  CHECK(r.p_value < 0.001);
}

TEST_CASE("the classic two-sample fixture reproduces to six decimals") {
  const std::vector<double> a = {27.5, 21.0, 19.0, 23.6, 17.0, 17.9, 16.9, 20.1,
                                 21.9, 22.6, 23.1, 19.6, 19.0, 21.7, 21.4};
  const std::vector<double> b = {27.1, 22.0, 20.8, 23.4, 23.4, 23.5,
                                 25.8, 22.0, 24.8, 20.2, 21.9, 22.1,
                                 22.9, 30.6, 20.5, 24.1, 21.8, 24.7};
  const WelchResult r = welch_t_test(a, b, 0.95);
  CHECK(r.t == doctest::Approx(-2.760039709849).epsilon(1e-6));
  CHECK(r.degrees_of_freedom == doctest::Approx(28.773615913495).epsilon(1e-6));
  CHECK(r.p_value == doctest::Approx(0.009948545126).epsilon(1e-6));
  CHECK(r.significant);
}

TEST_CASE("order of the samples flips the sign only") {
  const std::vector<double> a = {1, 2, 3};
  const std::vector<double> b = {4, 5, 9};
  const WelchResult ab = welch_t_test(a, b, 0.95);
  const WelchResult ba = welch_t_test(b, a, 0.95);
  CHECK(ab.t == doctest::Approx(-ba.t));
  CHECK(ab.p_value == doctest::Approx(ba.p_value));
  CHECK(ab.significant == ba.significant);
}

TEST_CASE("degenerate zero-variance pairs fall back to mean comparison") {
  const std::vector<double> twos = {2, 2, 2};
  const std::vector<double> threes = {3, 3, 3};
  const WelchResult different = welch_t_test(twos, threes, 0.95);
  CHECK(different.significant);
  CHECK(different.p_value == 0.0);
  CHECK(std::isinf(different.t));
  const WelchResult equal = welch_t_test(twos, twos, 0.95);
  CHECK_FALSE(equal.significant);
  CHECK(equal.p_value == 1.0);
  CHECK(equal.t == 0.0);
}

TEST_CASE("one-sided variance still uses the regular statistic") {
  const std::vector<double> flat = {5, 5, 5};
  const std::vector<double> spread = {1, 2, 3};
  const WelchResult r = welch_t_test(flat, spread, 0.95);
  CHECK(std::isfinite(r.t));
  CHECK(r.t > 0.0);
}

TEST_CASE("undersized samples and bad confidence are rejected") {
  const std::vector<double> one = {1.0};
  const std::vector<double> two = {1.0, 2.0};
  CHECK_THROWS_AS(welch_t_test(one, two, 0.95), ConfigError);
  CHECK_THROWS_AS(welch_t_test(two, one, 0.95), ConfigError);
  CHECK_THROWS_AS(welch_t_test(two, two, 0.0), ConfigError);
  CHECK_THROWS_AS(welch_t_test(two, two, 1.0), ConfigError);
}
