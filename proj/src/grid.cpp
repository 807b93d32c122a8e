#include "ltab/grid.hpp"

#include <algorithm>
#include <sstream>

namespace ltab {

const char* to_string(CellKind kind) noexcept {
  switch (kind) {
    case CellKind::red: return "red";
    case CellKind::blue: return "blue";
    case CellKind::gray: return "gray";
  }
  return "?";
}

GridTableau::GridTableau(int rows, int cols, Cell fill)
    : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(std::max(rows, 0) * std::max(cols, 0)), fill) {
  if (rows < 0 || cols < 0)
    throw TableauError(ErrorKind::dimension, "grid.size", "negative grid dimensions");
}

GridTableau GridTableau::from_rows(const std::vector<std::vector<Cell>>& rows) {
  const int height = static_cast<int>(rows.size());
  const int width = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  GridTableau grid(height, width);
  for (int r = 1; r <= height; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r - 1)];
    if (static_cast<int>(row.size()) != width)
      throw TableauError(ErrorKind::dimension, "grid.rectangular",
                         "row " + std::to_string(r) + " has " + std::to_string(row.size()) + " cells, expected " +
                             std::to_string(width));
    for (int c = 1; c <= width; ++c) grid.at({r, c}) = row[static_cast<std::size_t>(c - 1)];
  }
  return grid;
}

const Cell& GridTableau::at(BoxCoord c) const {
  if (!in_bounds(c)) throw TableauError(ErrorKind::dimension, "grid.bounds", "cell outside the grid", c);
  return cells_[static_cast<std::size_t>((c.row - 1) * cols_ + (c.col - 1))];
}

Cell& GridTableau::at(BoxCoord c) {
  if (!in_bounds(c)) throw TableauError(ErrorKind::dimension, "grid.bounds", "cell outside the grid", c);
  return cells_[static_cast<std::size_t>((c.row - 1) * cols_ + (c.col - 1))];
}

std::vector<Cell> GridTableau::row(int index) const {
  std::vector<Cell> out;
  for (int c = 1; c <= cols_; ++c) out.push_back(at({index, c}));
  return out;
}

int GridTableau::count(int row, CellKind kind) const {
  int n = 0;
  for (int c = 1; c <= cols_; ++c) n += at({row, c}).kind == kind;
  return n;
}

int GridTableau::leading(int row, CellKind kind) const {
  int n = 0;
  while (n < cols_ && at({row, n + 1}).kind == kind) ++n;
  return n;
}

GridTableau GridTableau::columns(int first, int last) const {
  GridTableau out(rows_, last - first + 1);
  for (int r = 1; r <= rows_; ++r)
    for (int c = first; c <= last; ++c) out.at({r, c - first + 1}) = at({r, c});
  return out;
}

GridTableau GridTableau::row_range(int first, int last) const {
  GridTableau out(last - first + 1, cols_);
  for (int r = first; r <= last; ++r)
    for (int c = 1; c <= cols_; ++c) out.at({r - first + 1, c}) = at({r, c});
  return out;
}

GridTableau GridTableau::append_columns(const GridTableau& other) const {
  if (other.rows_ != rows_)
    throw TableauError(ErrorKind::dimension, "grid.append", "row counts differ");
  GridTableau out(rows_, cols_ + other.cols_);
  for (int r = 1; r <= rows_; ++r) {
    for (int c = 1; c <= cols_; ++c) out.at({r, c}) = at({r, c});
    for (int c = 1; c <= other.cols_; ++c) out.at({r, cols_ + c}) = other.at({r, c});
  }
  return out;
}

std::string GridTableau::to_string() const {
  std::ostringstream os;
  for (int r = rows_; r >= 1; --r) {
    for (int c = 1; c <= cols_; ++c) {
      const Cell& cell = at({r, c});
      if (c > 1) os << ' ';
      switch (cell.kind) {
        case CellKind::red: os << 'r' << cell.value; break;
        case CellKind::blue: os << 'b' << cell.value; break;
        case CellKind::gray: os << "##"; break;
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace ltab
