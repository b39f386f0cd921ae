#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distspec {

/// Bad parameters or arguments; the message names the violated constraint.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Distances were requested on a graph with two mutually unreachable vertices.
class DisconnectedGraph : public std::runtime_error {
 public:
  DisconnectedGraph(std::size_t u, std::size_t v)
      : std::runtime_error("graph is disconnected: no path between vertices " +
                           std::to_string(u) + " and " + std::to_string(v)),
        u_(u),
        v_(v) {}

  std::size_t first() const { return u_; }
  std::size_t second() const { return v_; }

 private:
  std::size_t u_;
  std::size_t v_;
};

/// An exhaustive routine refused an input larger than its documented budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace distspec
