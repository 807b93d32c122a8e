#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "ltab/error.hpp"

namespace ltab {

/// Integer partition in canonical form: weakly decreasing, strictly positive
/// parts, no trailing zeros. Rows are indexed from the bottom (French).
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; any other zero, negative part or increase
  /// throws TableauError(validation).
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Builds the rectangle (cols^rows).
  static Partition rectangle(int rows, int cols);

  const std::vector<int>& parts() const noexcept { return parts_; }
  /// Length of the 1-based row, 0 past the last row.
  int row(int index) const noexcept;
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int width() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  Partition conjugate() const;
  bool fits(int max_rows, int max_cols) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Bounding box for shape enumeration: at most `rows` rows of at most `cols` boxes.
struct Box {
  int rows = 0;
  int cols = 0;

  friend bool operator==(const Box&, const Box&) = default;
};

/// Unbounded enough for every desk-scale computation in this library.
inline constexpr Box kUnbounded{1 << 20, 1 << 20};

/// outer / inner with inner contained in outer.
class SkewShape {
 public:
  SkewShape() = default;
  /// Throws TableauError(validation, "skew.containment") when inner is not inside outer.
  SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.size() - inner_.size(); }
  /// Number of rows spanned by the outer shape.
  int height() const noexcept { return outer_.length(); }
  /// Boxes of the skew shape, bottom row first, left to right.
  std::vector<BoxCoord> boxes() const;
  bool has_box(BoxCoord c) const noexcept;
  bool is_straight() const noexcept { return inner_.empty(); }

  std::string to_string() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

enum class StripKind { row, column };

/// mu's diagram is a subset of lambda's.
bool contains(const Partition& lambda, const Partition& mu);

bool is_horizontal_strip(const SkewShape& s);
bool is_vertical_strip(const SkewShape& s);
inline bool is_strip(const SkewShape& s, StripKind kind) {
  return kind == StripKind::row ? is_horizontal_strip(s) : is_vertical_strip(s);
}

/// All nu with nu/lambda a horizontal strip of size k and nu inside `cap`.
/// Sorted in descending lexicographic order, no duplicates.
std::vector<Partition> extensions_within(const Partition& lambda, int k, StripKind kind,
                                         const Partition& cap);

std::vector<Partition> extensions_by_row_strip(const Partition& lambda, int k, Box bounds);
std::vector<Partition> extensions_by_col_strip(const Partition& lambda, int k, Box bounds);

/// Every partition of n fitting the box, descending lexicographic order.
std::vector<Partition> partitions_in_box(int n, Box bounds);

}  // namespace ltab
