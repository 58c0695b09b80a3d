#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srg12 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size guard or structural precondition was violated by the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Parameters that admit no integral spectrum (or lie outside the family).
class InfeasibleParams : public Error {
 public:
  using Error::Error;
};

/// A counting kernel produced numbers that contradict its own postcondition.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class Graph6Error : public Error {
 public:
  Graph6Error(const std::string& what, std::size_t line, std::size_t byte)
      : Error(what + " (line " + std::to_string(line) + ", byte " + std::to_string(byte) + ")"),
        line_(line),
        byte_(byte) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t byte() const noexcept { return byte_; }

 private:
  std::size_t line_;
  std::size_t byte_;
};

}  // namespace srg12
