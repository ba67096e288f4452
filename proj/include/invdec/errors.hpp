#pragma once

#include <stdexcept>
#include <string>

namespace invdec {

// Base error. `code` is a stable machine-readable tag; the CLI surfaces it
// verbatim in JSON error objects.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// Violated precondition or otherwise malformed input. Process exit code 2.
class DomainError : public Error {
public:
  DomainError(std::string code, const std::string& msg)
      : Error(std::move(code), msg) {}
  explicit DomainError(const std::string& msg) : Error("precondition", msg) {}
};

// The sign oracle hit its precision cap before the query resolved. For a
// legitimate input this cannot happen; it signals a false independence
// promise or a cap set too low. Process exit code 3.
class PrecisionError : public Error {
public:
  explicit PrecisionError(const std::string& msg)
      : Error("precision_exhausted", msg) {}
};

// Syntax error in an expression or descriptor, with 1-based position.
class ParseError : public DomainError {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : DomainError("syntax_error", msg + " at line " + std::to_string(line) +
                                        ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace invdec
