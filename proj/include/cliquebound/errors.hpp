#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquebound {

// Bad caller input: out-of-range vertices, self-loops, malformed parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// graph6 / edge-list decoding failure. offset is the 0-based byte position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A numerical self-check failed (trace identity, eigenvalue ordering, ...).
// This signals a bug in the artifact, never bad input.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cliquebound
