#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sofic {

// Base of every error raised by the library. The CLI maps the concrete type
// to an exit code (see cli.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input: bad files, unknown symbols, graphs that
// are not right-resolving where that is required.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotRightResolving : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// The graph presents the empty shift once sources and sinks are stripped.
class EmptyShift : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A configurable size limit was hit (monoid budget, full-mode caps, table
// sizes). Never silently truncated.
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what, std::size_t reached)
      : Error(what + " (reached " + std::to_string(reached) + ")"), reached_(reached) {}
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

// An internal invariant that holds by theorem was violated. Always a bug or
// inconsistent inputs (for example codes that do not form a conjugacy).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// The gap-filling step could not follow the transported labels.
class LabelPathDied : public ConstructionError {
 public:
  using ConstructionError::ConstructionError;
};

}  // namespace sofic
