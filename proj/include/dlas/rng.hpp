#pragma once

#include <cstdint>
#include <utility>

namespace dlas {

// One splitmix64 step. Used to expand seeds and to mix batch indices.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// xoshiro256++ seeded through splitmix64. The standard library engines and
// distributions are not bit-stable across implementations; every draw here
// must reproduce exactly on any platform, so both the generator and the
// bounded draw are fixed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) word = mix64(x++);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Unbiased draw from [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Two distinct values from [0, n), n >= 2, uniform over distinct pairs;
  // order unspecified.
  std::pair<std::uint64_t, std::uint64_t> two_below(std::uint64_t n) {
    const std::uint64_t a = below(n);
    std::uint64_t b = below(n - 1);
    if (b >= a) ++b;
    return {a, b};
  }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }

  std::uint64_t state_[4];
};

// Seed for run `index` of a batch. A pure function of (base_seed, index), so
// batches reproduce regardless of how runs are scheduled across workers.
inline std::uint64_t derive_run_seed(std::uint64_t base_seed, std::uint64_t index) {
  return mix64(base_seed ^ mix64(index + 1));
}

}  // namespace dlas
