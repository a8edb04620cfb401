#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stellar {

// Malformed text/JSON/CSV input. line() is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Local refinement of the coherent-state overlap did not settle within the
// configured number of steps.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two arrangement points coincide, so an inverse-distance objective is undefined.
class DegenerateArrangementError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace stellar
