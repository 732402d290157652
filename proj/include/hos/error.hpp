#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hos {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands live in towers that are not prefixes of one another.
class TowerMismatch : public Error {
 public:
  TowerMismatch() : Error("tower mismatch: merge the towers first") {}
};

class DepthLimitExceeded : public Error {
 public:
  explicit DepthLimitExceeded(std::size_t limit)
      : Error("tower depth limit " + std::to_string(limit) + " exceeded") {}
};

/// A precondition on the mathematical input failed (zero vector, equal points, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hos
