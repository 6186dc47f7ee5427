#pragma once

#include <stdexcept>
#include <string>

namespace pg10 {

// A linear system whose unique solution is negative or non-integral.
struct InfeasibleSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The MacWilliams transform produced a non-integral coefficient.
struct NonIntegralResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InconsistentPins : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnderDetermined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckpointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pg10
