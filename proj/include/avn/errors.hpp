#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace avn {

// Mismatched lengths, out-of-range indices and similar caller bugs.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but outside what an operation answers
// (disconnected graphs, fewer than three qubits, ...).
class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size guard tripped (statevector too large, factorial blow-up, ...).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph or distribution text. `position()` is a 0-based column.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " (at column " + std::to_string(position + 1) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace avn
