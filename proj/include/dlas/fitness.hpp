#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace dlas {

// Costs are exact integers so equality in acceptance rules is well-defined.
// Smaller is better.
using Fitness = std::int64_t;

// Circular fitness history with a lazily maintained maximum.
//
// max_value is exact after every mutation. max_count may undercount the
// number of slots holding max_value (raise_slot can duplicate the maximum
// without touching the count) but it never overcounts and never drops below
// one; the rescan when a decrement reaches zero restores both exactly.
class FitnessArray {
 public:
  FitnessArray(std::size_t length, Fitness fill)
      : values_(length, fill), max_value_(fill), max_count_(length) {
    assert(length >= 1);
  }

  explicit FitnessArray(std::vector<Fitness> values) : values_(std::move(values)) {
    assert(!values_.empty());
    rescan();
  }

  std::size_t size() const { return values_.size(); }
  Fitness operator[](std::size_t i) const { return values_[i]; }
  Fitness max_value() const { return max_value_; }
  std::size_t max_count() const { return max_count_; }

  // Overwrite without count bookkeeping. Sound only for f <= max_value,
  // which holds for every caller: the current fitness never exceeds the
  // array maximum.
  void raise_slot(std::size_t i, Fitness f) {
    assert(f <= max_value_);
    values_[i] = f;
  }

  // Overwrite with f < values_[i], keeping the maximum exact: losing the
  // last counted copy of the maximum forces a rescan.
  void lower_slot(std::size_t i, Fitness f) {
    assert(f < values_[i]);
    if (values_[i] == max_value_) --max_count_;
    values_[i] = f;
    if (max_count_ == 0) rescan();
  }

 private:
  void rescan() {
    max_value_ = *std::max_element(values_.begin(), values_.end());
    max_count_ = static_cast<std::size_t>(
        std::count(values_.begin(), values_.end(), max_value_));
  }

  std::vector<Fitness> values_;
  Fitness max_value_ = 0;
  std::size_t max_count_ = 0;
};

}  // namespace dlas
