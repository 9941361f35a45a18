#pragma once

#include <stdexcept>

namespace dlas {

// Invalid configuration, detected before any search work starts.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed instance or spec content; the message names the offending spot.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dlas
