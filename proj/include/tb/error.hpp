#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tb {

/// Base of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid numeric parameters (negative sizes, n < a, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A size cap (64 vertices, 16 for canonical keys, search limits) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold (not independent, not good, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries the byte offset of the first bad byte.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The skeleton edge list is not a tree.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A cycle length is even or shorter than 3.
class LengthError : public Error {
 public:
  using Error::Error;
};

/// A tree edge has no cycle length, or a length names a non-edge.
class CompletenessError : public Error {
 public:
  using Error::Error;
};

}  // namespace tb
