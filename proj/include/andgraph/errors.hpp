#pragma once

#include <stdexcept>
#include <string>

namespace andgraph {

/// Malformed input text. Carries the 1-based line number (0 when unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An operation was called on an input outside its domain
/// (disconnected graph, wrong dimension, unsafe glue vertex, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace andgraph
