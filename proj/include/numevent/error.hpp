#pragma once

#include <stdexcept>
#include <string>

namespace numevent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. Carries a 1-based position for diagnostics.
class ParseError : public Error {
 public:
  ParseError(std::string source, int line, int column, const std::string& what);

  const std::string& source() const noexcept { return source_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  std::string source_;
  int line_;
  int column_;
};

/// Raised when a search exceeds its node budget instead of guessing.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace numevent
