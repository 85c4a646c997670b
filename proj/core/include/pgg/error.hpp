#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgg {

/// Raised for malformed or unsupported input graphs.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the `.pgg` reader. `line()` is 1-based; 0 when no single line is to blame.
class ParseError : public InputError {
 public:
  enum class Kind {
    Syntax,
    MissingGraphLine,
    DuplicateVertex,
    CoincidentVertices,
    UnknownVertex,
    SelfLoop,
    DuplicateEdge,
    CrossingEdges,
    Disconnected,
  };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

}  // namespace pgg
