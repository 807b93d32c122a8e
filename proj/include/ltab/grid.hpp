#pragma once

#include <string>
#include <vector>

#include "ltab/error.hpp"

namespace ltab {

enum class CellKind { red, blue, gray };

const char* to_string(CellKind kind) noexcept;

/// A typed grid cell. Gray cells carry no value (stored as 0).
struct Cell {
  CellKind kind = CellKind::blue;
  int value = 0;

  static Cell red(int v) { return {CellKind::red, v}; }
  static Cell blue(int v) { return {CellKind::blue, v}; }
  static Cell gray() { return {CellKind::gray, 0}; }

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Rectangular grid of typed cells addressed by French coordinates.
class GridTableau {
 public:
  GridTableau() = default;
  GridTableau(int rows, int cols, Cell fill = Cell::blue(0));
  /// `rows[i]` is row i+1 counted from the bottom; all rows must have equal length.
  static GridTableau from_rows(const std::vector<std::vector<Cell>>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const Cell& at(BoxCoord c) const;
  Cell& at(BoxCoord c);
  bool in_bounds(BoxCoord c) const noexcept {
    return c.row >= 1 && c.row <= rows_ && c.col >= 1 && c.col <= cols_;
  }
  std::vector<Cell> row(int index) const;

  /// Number of cells of the given kind in a row, and the leftmost run length.
  int count(int row, CellKind kind) const;
  int leading(int row, CellKind kind) const;

  /// Columns [first, last] (1-based, inclusive).
  GridTableau columns(int first, int last) const;
  /// Rows [first, last] (1-based, inclusive).
  GridTableau row_range(int first, int last) const;
  /// Appends `other` to the right; row counts must agree.
  GridTableau append_columns(const GridTableau& other) const;

  std::string to_string() const;

  friend bool operator==(const GridTableau&, const GridTableau&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cell> cells_;
};

}  // namespace ltab
