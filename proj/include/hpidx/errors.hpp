#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hpidx {

/// Category of a recoverable failure. The CLI maps these onto exit codes.
enum class ErrorKind {
  Parse,          // malformed input text
  Validation,     // input violates a graph invariant (self-loop, bad token)
  Precondition,   // operation called outside its domain (not a tree, ...)
  NotConnected,
  EmptyLineGraph,
  EdgeStarvation,
  BudgetExceeded,
  Capped,
  TooLargeForCanonicalization,
  KUndefined,
  OutOfFamily,
  Unreachable,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures caused by a computational cap rather than bad input.
  bool is_cap() const noexcept {
    return kind_ == ErrorKind::Capped || kind_ == ErrorKind::BudgetExceeded;
  }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what),
        line_(line),
        detail_(what) {}
  std::size_t line() const noexcept { return line_; }
  /// Message without the line prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// An intermediate iterate would exceed the configured size budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t stage, std::size_t vertices, std::size_t edges)
      : Error(ErrorKind::BudgetExceeded,
              "budget exceeded at stage " + std::to_string(stage) +
                  " (predicted |V|=" + std::to_string(vertices) +
                  ", |E|=" + std::to_string(edges) + ")"),
        stage_(stage), vertices_(vertices), edges_(edges) {}

  std::size_t stage() const noexcept { return stage_; }
  std::size_t predicted_vertices() const noexcept { return vertices_; }
  std::size_t predicted_edges() const noexcept { return edges_; }

 private:
  std::size_t stage_, vertices_, edges_;
};

}  // namespace hpidx
