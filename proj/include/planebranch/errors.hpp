#pragma once

// Error taxonomy shared by the library and the CLI.
//
// The CLI maps exception types to process exit codes:
//   ParseError      -> 2   (bad input text; carries a byte offset)
//   MathError       -> 3   (domain violations, impossible requests)
//   TruncationError -> 3   (a series was consulted beyond its known terms)
//   BoundError      -> 4   (a search exhausted its configured bounds)

#include <cstddef>
#include <stdexcept>
#include <string>

namespace planebranch {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation would need series coefficients beyond the stored
// truncation order. Callers that can retry with more terms catch this.
class TruncationError : public MathError {
 public:
  explicit TruncationError(const std::string& what) : MathError(what) {}
};

// Raised when a bounded search (degree bound, jet order) finds nothing and the
// caller asked for a definite answer.
class BoundError : public std::runtime_error {
 public:
  explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace planebranch
