#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relpack {

// Input exceeds the bitset-backed cap (4096 vertices) or a module's
// desk-scale guard.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented operation precondition does not hold for the given input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The supplied LP is unbounded above.
class UnboundedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver failed its own certificate check, or two redundant computation
// paths disagreed. Always indicates a bug, never bad input.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; carries the byte offset of the offending data.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace relpack
