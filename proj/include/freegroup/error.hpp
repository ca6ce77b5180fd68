#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different alphabets, or a letter indexes past the rank.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// Input is trivial where a nontrivial element is required (empty word, empty tuple).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : Error(message + " (at column " + std::to_string(column + 1) + ")"), column_(column) {}

  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

}  // namespace fg
