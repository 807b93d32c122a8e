#include "ltab/shapes.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

namespace ltab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw TableauError(ErrorKind::validation, "partition.positive",
                         "part " + std::to_string(i + 1) + " is " + std::to_string(parts_[i]));
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw TableauError(ErrorKind::validation, "partition.decreasing",
                         "part " + std::to_string(i + 1) + " exceeds the part below it");
    size_ += parts_[i];
  }
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows <= 0 || cols <= 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

int Partition::row(int index) const noexcept {
  if (index < 1 || index > length()) return 0;
  return parts_[static_cast<std::size_t>(index - 1)];
}

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(width()), 0);
  for (int part : parts_)
    for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(std::move(out));
}

bool Partition::fits(int max_rows, int max_cols) const noexcept {
  return length() <= max_rows && width() <= max_cols;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_))
    throw TableauError(ErrorKind::validation, "skew.containment",
                       inner_.to_string() + " is not contained in " + outer_.to_string());
}

std::vector<BoxCoord> SkewShape::boxes() const {
  std::vector<BoxCoord> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int r = 1; r <= outer_.length(); ++r)
    for (int c = inner_.row(r) + 1; c <= outer_.row(r); ++c) out.push_back({r, c});
  return out;
}

bool SkewShape::has_box(BoxCoord c) const noexcept {
  return c.row >= 1 && c.col > inner_.row(c.row) && c.col <= outer_.row(c.row);
}

std::string SkewShape::to_string() const {
  return inner_.empty() ? outer_.to_string() : outer_.to_string() + "/" + inner_.to_string();
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.row(i) > lambda.row(i)) return false;
  return true;
}

bool is_horizontal_strip(const SkewShape& s) {
  // Interlacing: the inner row below must reach every box of the next outer row.
  for (int i = 1; i < s.outer().length(); ++i)
    if (s.outer().row(i + 1) > s.inner().row(i)) return false;
  return true;
}

bool is_vertical_strip(const SkewShape& s) {
  for (int i = 1; i <= s.outer().length(); ++i)
    if (s.outer().row(i) - s.inner().row(i) > 1) return false;
  return true;
}

namespace {

void sort_descending(std::vector<Partition>& v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void grow_row_strip(const Partition& lambda, const Partition& cap, int row, int remaining,
                    std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    std::vector<int> parts = current;
    for (int i = row; i <= lambda.length(); ++i) parts.push_back(lambda.row(i));
    out.emplace_back(std::move(parts));
    return;
  }
  if (row > cap.length() || row > lambda.length() + 1) return;
  const int low = lambda.row(row);
  const int high = std::min(cap.row(row), row == 1 ? cap.row(1) : lambda.row(row - 1));
  for (int v = std::min(high, low + remaining); v >= low; --v) {
    current.push_back(v);
    grow_row_strip(lambda, cap, row + 1, remaining - (v - low), current, out);
    current.pop_back();
  }
}

void grow_col_strip(const Partition& lambda, const Partition& cap, int row, int remaining,
                    std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    std::vector<int> parts = current;
    for (int i = row; i <= lambda.length(); ++i) parts.push_back(lambda.row(i));
    out.emplace_back(std::move(parts));
    return;
  }
  if (row > cap.length()) return;
  const int base = lambda.row(row);
  const int above_limit = row == 1 ? cap.row(1) : current.back();
  if (base + 1 <= std::min(above_limit, cap.row(row))) {
    current.push_back(base + 1);
    grow_col_strip(lambda, cap, row + 1, remaining - 1, current, out);
    current.pop_back();
  }
  if (row <= lambda.length()) {
    current.push_back(base);
    grow_col_strip(lambda, cap, row + 1, remaining, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> extensions_within(const Partition& lambda, int k, StripKind kind,
                                         const Partition& cap) {
  std::vector<Partition> out;
  if (k < 0 || !contains(cap, lambda) || lambda.size() + k > cap.size()) return out;
  std::vector<int> current;
  if (kind == StripKind::row)
    grow_row_strip(lambda, cap, 1, k, current, out);
  else
    grow_col_strip(lambda, cap, 1, k, current, out);
  sort_descending(out);
  return out;
}

std::vector<Partition> extensions_by_row_strip(const Partition& lambda, int k, Box bounds) {
  const int rows = std::min(bounds.rows, lambda.length() + 1);
  return extensions_within(lambda, k, StripKind::row, Partition::rectangle(rows, bounds.cols));
}

std::vector<Partition> extensions_by_col_strip(const Partition& lambda, int k, Box bounds) {
  const int rows = std::min(bounds.rows, lambda.length() + std::max(k, 0));
  const int cols = std::min(bounds.cols, lambda.width() + 1);
  return extensions_within(lambda, k, StripKind::column, Partition::rectangle(rows, cols));
}

namespace {

void fill_partitions(int remaining, int max_part, int rows_left, std::vector<int>& current,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (rows_left == 0) return;
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    current.push_back(p);
    fill_partitions(remaining - p, p, rows_left - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int n, Box bounds) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  fill_partitions(n, bounds.cols, bounds.rows, current, out);
  return out;
}

}  // namespace ltab
