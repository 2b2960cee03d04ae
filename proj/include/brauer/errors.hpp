#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brauer {

/// Bad parameters or malformed input values (dimension mismatch, Z/1, a
/// complex with nonzero boundary-of-boundary, ...).
class SemanticError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is valid but falls outside what the symbolic tables can
/// evaluate (non-diagonal colimit blocks, Ext of an opaque atom, ...).
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Syntax error in a request literal. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace brauer
