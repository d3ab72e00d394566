#pragma once

#include <stdexcept>
#include <string>

namespace paraframe {

/// Malformed expression or manifold file. line == 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Input data violating a structural requirement (axioms, Jacobi, preconditions).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A verified-before-return identity failed: two routes that must agree did
/// not. Carries both component tables for the report.
class InternalConsistencyError : public std::runtime_error {
 public:
  InternalConsistencyError(std::string what, std::string expected_table, std::string computed_table)
      : std::runtime_error(std::move(what)),
        expected_table_(std::move(expected_table)),
        computed_table_(std::move(computed_table)) {}
  const std::string& expected_table() const { return expected_table_; }
  const std::string& computed_table() const { return computed_table_; }

 private:
  std::string expected_table_;
  std::string computed_table_;
};

}  // namespace paraframe
