#pragma once

#include <stdexcept>
#include <string>

namespace fcadepth {

/// Set or measure drawn from a universe of the wrong size.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive enumeration would exceed a configured cap.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data. Carries an optional row/column coordinate.
class IngestionError : public std::runtime_error {
 public:
  explicit IngestionError(const std::string& what, long row = -1, long column = -1)
      : std::runtime_error(format(what, row, column)), row_(row), column_(column) {}

  long row() const { return row_; }
  long column() const { return column_; }

 private:
  static std::string format(const std::string& what, long row, long column) {
    if (row < 0 && column < 0) return what;
    std::string where = " (";
    if (row >= 0) where += "row " + std::to_string(row);
    if (row >= 0 && column >= 0) where += ", ";
    if (column >= 0) where += "column " + std::to_string(column);
    return what + where + ")";
  }
  long row_;
  long column_;
};

/// Structure that violates a stated invariant (partial-order axioms, tree
/// consistency, quasiconcavity of a target, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fcadepth
