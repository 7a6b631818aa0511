#pragma once

#include <stdexcept>
#include <string>

namespace mpm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphErrorKind {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  PriorityOutOfRange,
  PriorityCountMismatch,
  EdgeIndexOutOfRange,
};

// Invalid graph construction input or bad index into an existing graph.
class GraphError : public Error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

class NotBipartiteError : public Error {
 public:
  using Error::Error;
};

// Text input rejected; line() is 1-based, 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Oracle enumeration limits exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace mpm
