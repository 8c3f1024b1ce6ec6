// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mass {

/// Base class for all runtime failures raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid data handed to a constructor or builder.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. Carries the 1-based line/column where known (0 = n/a).
class ParseError : public ValidationError {
 public:
  explicit ParseError(const std::string& msg, std::size_t line = 0, std::size_t column = 0)
      : ValidationError(msg), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// No perfect assignment over finite cells exists. Carries a blocking
/// row/column set (0-based indices): the named rows have finite cells only in
/// the named columns, and there are fewer columns than rows.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& msg, std::vector<int> rows, std::vector<int> cols)
      : Error(msg), rows_(std::move(rows)), cols_(std::move(cols)) {}

  const std::vector<int>& blocking_rows() const { return rows_; }
  const std::vector<int>& blocking_cols() const { return cols_; }

 private:
  std::vector<int> rows_;
  std::vector<int> cols_;
};

/// Instance exceeds the exhaustive-enumeration guard.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

}  // namespace mass
