#include <cstdint>
#include <set>

#include "dlas/rng.hpp"
#include "doctest.h"

using namespace dlas;

TEST_CASE("equal seeds produce equal streams") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("different seeds diverge immediately") {
  Rng a(1);
  Rng b(2);
  int collisions = 0;
  for (int i = 0; i < 64; ++i) collisions += a.next() == b.next();
  CHECK(collisions == 0);
}

TEST_CASE("bounded draws stay in range and reach every value") {
  Rng rng(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t v = rng.below(13);
    REQUIRE(v < 13);
    seen.insert(v);
  }
  CHECK(seen.size() == 13);
}

TEST_CASE("bound of one is the only possible draw") {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) CHECK(rng.below(1) == 0);
}

TEST_CASE("distinct pairs are distinct and in range") {
  Rng rng(9);
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (int i = 0; i < 20000; ++i) {
    const auto [a, b] = rng.two_below(5);
    REQUIRE(a < 5);
    REQUIRE(b < 5);
    REQUIRE(a != b);
    seen.insert({a, b});
  }
  // All 20 ordered pairs occur.
  CHECK(seen.size() == 20);
}

TEST_CASE("run seeds differ across bases and indices") {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t base : {0ull, 1ull, 99ull, 12345678901ull})
    for (std::uint64_t index = 0; index < 100; ++index)
      seeds.insert(derive_run_seed(base, index));
  CHECK(seeds.size() == 400);
}

TEST_CASE("run seeds are pure functions of base and index") {
  CHECK(derive_run_seed(5, 17) == derive_run_seed(5, 17));
  CHECK(derive_run_seed(5, 17) != derive_run_seed(5, 18));
  CHECK(derive_run_seed(5, 17) != derive_run_seed(6, 17));
}
