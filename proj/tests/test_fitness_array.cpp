#include <algorithm>
#include <cstddef>
#include <vector>

#include "dlas/fitness.hpp"
#include "dlas/rng.hpp"
#include "dlas/strategy.hpp"
#include "doctest.h"

using namespace dlas;

namespace {

Fitness scan_max(const FitnessArray& a) {
  Fitness m = a[0];
  for (std::size_t i = 1; i < a.size(); ++i) m = std::max(m, a[i]);
  return m;
}

std::size_t scan_count(const FitnessArray& a, Fitness value) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a[i] == value;
  return n;
}

}  // namespace

TEST_CASE("filled construction counts every slot as the maximum") {
  const FitnessArray a(4, 17);
  CHECK(a.size() == 4);
  CHECK(a.max_value() == 17);
  CHECK(a.max_count() == 4);
}

TEST_CASE("vector construction scans for the maximum") {
  const FitnessArray a({3, 9, 9, 1});
  CHECK(a.max_value() == 9);
  CHECK(a.max_count() == 2);
}

TEST_CASE("lowering one copy of a duplicated maximum keeps the other") {
  FitnessArray a({9, 9, 4});
  REQUIRE(a.max_value() == 9);
  REQUIRE(a.max_count() == 2);
  dlas_apply_replacement(a, 0, 5, 7);
  CHECK(a[0] == 5);
  CHECK(a[1] == 9);
  CHECK(a[2] == 4);
  CHECK(a.max_value() == 9);
  CHECK(a.max_count() == 1);
  CHECK(a.max_value() == scan_max(a));
}

TEST_CASE("losing the last counted maximum forces an exact rescan") {
  FitnessArray a({9, 4, 4});
  REQUIRE(a.max_count() == 1);
  dlas_apply_replacement(a, 0, 5, 7);
  CHECK(a[0] == 5);
  CHECK(a.max_value() == 5);
  CHECK(a.max_count() == 1);
  CHECK(a.max_value() == scan_max(a));
}

TEST_CASE("a value equal to its slot changes nothing") {
  FitnessArray a({4, 4, 4});
  dlas_apply_replacement(a, 1, 4, 4);
  CHECK(a[0] == 4);
  CHECK(a[1] == 4);
  CHECK(a[2] == 4);
  CHECK(a.max_value() == 4);
  CHECK(a.max_count() == 3);
}

TEST_CASE("raising a slot to the maximum never overcounts") {
  FitnessArray a({9, 4, 4});
  a.raise_slot(1, 9);
  // The duplicate is deliberately uncounted; the count stays sound.
  CHECK(a.max_value() == 9);
  CHECK(a.max_count() >= 1);
  CHECK(a.max_count() <= scan_count(a, 9));
  // Lowering the counted copy triggers the self-correcting rescan.
  a.lower_slot(0, 3);
  CHECK(a.max_value() == 9);
  CHECK(a.max_count() == 1);
}

TEST_CASE("the maximum stays exact under randomized history traffic") {
  // Drive the array exactly as the searching strategies do, auditing against
  // a full scan after every operation.
  Rng rng(123);
  FitnessArray a(8, 50);
  Fitness current = 50;
  for (int step = 0; step < 50000; ++step) {
    const Fitness previous = current;
    const Fitness candidate = static_cast<Fitness>(rng.below(101));
    if (dlas_accept(candidate, current, a.max_value())) current = candidate;
    dlas_apply_replacement(a, step % a.size(), current, previous);
    REQUIRE(a.max_value() == scan_max(a));
    REQUIRE(a.max_count() >= 1);
    REQUIRE(a.max_count() <= scan_count(a, a.max_value()));
  }
}

TEST_CASE("the maximum stays exact under downward-only traffic") {
  Rng rng(5);
  FitnessArray a(6, 80);
  Fitness current = 80;
  for (int step = 0; step < 50000; ++step) {
    const std::size_t slot = step % a.size();
    const Fitness candidate = static_cast<Fitness>(rng.below(101));
    if (lahc_accept(candidate, current, a[slot])) current = candidate;
    lahc_replace(a, slot, current);
    REQUIRE(a.max_value() == scan_max(a));
    REQUIRE(a.max_count() == scan_count(a, a.max_value()));
  }
}
