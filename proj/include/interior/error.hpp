#pragma once

#include <stdexcept>
#include <string>

namespace interior {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge endpoint out of range, or an edge that is not part of the graph.
class InvalidEdge : public Error {
 public:
  using Error::Error;
};

/// The same (v, w) pair listed twice.
class ParallelEdge : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain of an operation.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A size, point-count or subset-count cap was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not. Always an implementation bug.
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed graph file.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Methods asked to compute the same polynomial returned different results.
class MethodMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace interior
