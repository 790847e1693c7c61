#pragma once

#include <stdexcept>

namespace polydisk {

// Two cross-checked routes disagreed (or a guaranteed limit failed to
// materialize): either a bug or precision exhaustion, never a valid verdict.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was invoked outside its hypothesis (e.g. a pilot curve of the
// wrong class); the message names the failed requirement.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A gallery construction was evaluated where its defining hypothesis fails.
struct HypothesisViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace polydisk
