#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltab/bigint.hpp"
#include "ltab/shapes.hpp"

namespace ltab {

enum class Orientation { standard, rotated180 };

/// Multiplicity vector of a filling. `zeros` is m_0; `positive[i]` is m_{i+1}
/// with trailing zeros trimmed.
struct Content {
  int zeros = 0;
  std::vector<int> positive;

  /// (m^count): `count` letters 1..count each used m times.
  static Content uniform(int multiplicity, int count);
  int of(int letter) const noexcept;
  std::string to_string() const;

  friend bool operator==(const Content&, const Content&) = default;
};

/// A filling of a (possibly skew) shape with nonnegative integers.
///
/// The shape and rows hold the cells as drawn in the plane. When the
/// orientation is rotated180 the object is read as a standard-orientation
/// filling after rotating its anchor box by 180 degrees; the validity
/// predicates below always use that standard reading.
class Filling {
 public:
  Filling() = default;
  /// `rows[i]` lists the entries of row i+1 (bottom first) left to right.
  /// Trailing empty rows are ignored. For standard orientation `box` defaults
  /// to the tight bounding box of the outer shape; rotated fillings must name it.
  Filling(SkewShape shape, std::vector<std::vector<int>> rows,
          Orientation orientation = Orientation::standard, std::optional<Box> box = std::nullopt);

  /// Straight-shape filling from its rows (bottom row first).
  static Filling from_rows(std::vector<std::vector<int>> rows);

  const SkewShape& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  Orientation orientation() const noexcept { return orientation_; }
  Box box() const noexcept { return box_; }
  int size() const noexcept { return shape_.size(); }
  bool empty() const noexcept { return shape_.size() == 0; }

  /// Entry in a drawn box; throws TableauError(dimension) outside the shape.
  int at(BoxCoord c) const;
  int max_entry() const noexcept;

  /// The same cells relabelled as a standard-orientation object.
  Filling as_drawn() const;
  /// Standard-orientation reading: rotates back when the orientation is rotated180.
  Filling standard_reading() const;

  std::string to_string() const;

  friend bool operator==(const Filling& a, const Filling& b);

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
  Orientation orientation_ = Orientation::standard;
  Box box_{};
};

enum class FillingKind { ssyt, transposed };

/// Inclusive letter range used by enumeration.
struct Alphabet {
  int low = 0;
  int high = 0;
};

/// One factor of an iterated Pieri product: a row (horizontal strip) or
/// column (vertical strip) of the given size.
struct Strip {
  StripKind kind = StripKind::row;
  int size = 0;
};

bool is_ssyt(const Filling& f);
bool is_transposed_ssyt(const Filling& f);
bool is_syt(const Filling& f);

Content content(const Filling& f);

/// Maps drawn cells (row, col) to (H+1-row, W+1-col) inside `target` and
/// toggles the orientation. Involutive for a fixed target box.
Filling rotate180(const Filling& f, Box target);

/// e -> r - e on every entry. Throws TableauError(alphabet) if an entry exceeds r.
Filling invert_alphabet(const Filling& f, int r);

/// n! / prod(hooks), exact.
BigInt count_syt_hook_length(const Partition& lambda);

/// Fillings of `shape` obtained by extending shape.inner() with the given
/// strips in order, labelled first_label, first_label+1, ...; every returned
/// filling covers the shape exactly. Deterministic order.
std::vector<Filling> enumerate_strip_fillings(const SkewShape& shape, const std::vector<Strip>& strips,
                                              int first_label = 1);

/// Straight-shape fillings grown from the empty partition by the strips in
/// order, of any final shape inside `cap`.
std::vector<Filling> enumerate_strip_growths(const Partition& cap, const std::vector<Strip>& strips,
                                             int first_label = 1);

/// SSYT (horizontal strips) or transposed SSYT (vertical strips) over the
/// alphabet, optionally with fixed content.
std::vector<Filling> enumerate_fillings(const SkewShape& shape, FillingKind kind, Alphabet alphabet,
                                        const std::optional<Content>& fixed = std::nullopt);

}  // namespace ltab
