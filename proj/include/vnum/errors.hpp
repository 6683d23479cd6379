#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vnum {

/// Malformed or inconsistent caller input (bad exponent vectors, parse errors).
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what), message_(what) {}

  InputError(const std::string& what, std::size_t line, std::size_t column)
      : std::invalid_argument(what + " (line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ")"),
        message_(what), line_(line), column_(column) {}

  /// what() without the position suffix.
  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::string message_;
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

/// Operation is undefined for the given value (zero or unit ideal, prime not associated, ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Exponent or degree arithmetic left the representable range.
class ArithmeticError : public std::overflow_error {
public:
  explicit ArithmeticError(const std::string& what) : std::overflow_error(what) {}
};

/// An internal invariant that should always hold was violated. Always a bug.
class ConsistencyError : public std::logic_error {
public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

} // namespace vnum
