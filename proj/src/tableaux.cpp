#include "ltab/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ltab {

Content Content::uniform(int multiplicity, int count) {
  Content c;
  if (multiplicity > 0 && count > 0) c.positive.assign(static_cast<std::size_t>(count), multiplicity);
  return c;
}

int Content::of(int letter) const noexcept {
  if (letter == 0) return zeros;
  if (letter < 0 || letter > static_cast<int>(positive.size())) return 0;
  return positive[static_cast<std::size_t>(letter - 1)];
}

std::string Content::to_string() const {
  std::ostringstream os;
  os << "m0=" << zeros << " (";
  for (std::size_t i = 0; i < positive.size(); ++i) os << (i ? "," : "") << positive[i];
  os << ')';
  return os.str();
}

Filling::Filling(SkewShape shape, std::vector<std::vector<int>> rows, Orientation orientation,
                 std::optional<Box> box)
    : shape_(std::move(shape)), rows_(std::move(rows)), orientation_(orientation) {
  const auto height = static_cast<std::size_t>(shape_.height());
  while (rows_.size() > height && rows_.back().empty()) rows_.pop_back();
  rows_.resize(std::max(rows_.size(), height));
  if (rows_.size() != height)
    throw TableauError(ErrorKind::validation, "filling.row_count",
                       "shape " + shape_.to_string() + " has " + std::to_string(height) + " rows");
  for (int r = 1; r <= shape_.height(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r - 1)];
    const int expected = shape_.outer().row(r) - shape_.inner().row(r);
    if (static_cast<int>(row.size()) != expected)
      throw TableauError(ErrorKind::validation, "filling.row_length",
                         "row holds " + std::to_string(row.size()) + " entries, shape needs " +
                             std::to_string(expected),
                         BoxCoord{r, shape_.inner().row(r) + 1});
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] < 0)
        throw TableauError(ErrorKind::validation, "filling.nonnegative", "negative entry",
                           BoxCoord{r, shape_.inner().row(r) + 1 + static_cast<int>(j)});
  }
  if (box) {
    box_ = *box;
  } else {
    if (orientation_ == Orientation::rotated180)
      throw TableauError(ErrorKind::dimension, "filling.anchor_box", "rotated filling needs an anchor box");
    box_ = Box{shape_.outer().length(), shape_.outer().width()};
  }
  if (!shape_.outer().fits(box_.rows, box_.cols))
    throw TableauError(ErrorKind::dimension, "filling.fits_box",
                       shape_.to_string() + " exceeds box " + std::to_string(box_.rows) + "x" +
                           std::to_string(box_.cols));
}

Filling Filling::from_rows(std::vector<std::vector<int>> rows) {
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return Filling(SkewShape(Partition(std::move(parts))), std::move(rows));
}

int Filling::at(BoxCoord c) const {
  if (!shape_.has_box(c))
    throw TableauError(ErrorKind::dimension, "filling.box", "not a box of " + shape_.to_string(), c);
  return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - shape_.inner().row(c.row) - 1)];
}

int Filling::max_entry() const noexcept {
  int best = -1;
  for (const auto& row : rows_)
    for (int v : row) best = std::max(best, v);
  return best;
}

Filling Filling::as_drawn() const { return Filling(shape_, rows_, Orientation::standard, box_); }

Filling Filling::standard_reading() const {
  if (orientation_ == Orientation::standard) return *this;
  return rotate180(*this, box_);
}

std::string Filling::to_string() const {
  std::ostringstream os;
  for (int r = shape_.height(); r >= 1; --r) {
    os << std::string(static_cast<std::size_t>(shape_.inner().row(r)) * 3, ' ');
    for (int v : rows_[static_cast<std::size_t>(r - 1)]) {
      std::string cell = std::to_string(v);
      os << std::string(cell.size() < 3 ? 3 - cell.size() : 1, ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

bool operator==(const Filling& a, const Filling& b) {
  if (a.shape_ != b.shape_ || a.rows_ != b.rows_ || a.orientation_ != b.orientation_) return false;
  return a.orientation_ == Orientation::standard || a.box_ == b.box_;
}

namespace {

enum class Order { weak, strict };

bool increasing(int lower, int upper, Order order) {
  return order == Order::weak ? lower <= upper : lower < upper;
}

bool check_monotone(const Filling& drawn, Order along_rows, Order up_columns) {
  const SkewShape& s = drawn.shape();
  for (const BoxCoord c : s.boxes()) {
    const BoxCoord right{c.row, c.col + 1};
    const BoxCoord up{c.row + 1, c.col};
    if (s.has_box(right) && !increasing(drawn.at(c), drawn.at(right), along_rows)) return false;
    if (s.has_box(up) && !increasing(drawn.at(c), drawn.at(up), up_columns)) return false;
  }
  return true;
}

}  // namespace

bool is_ssyt(const Filling& f) {
  return check_monotone(f.standard_reading(), Order::weak, Order::strict);
}

bool is_transposed_ssyt(const Filling& f) {
  return check_monotone(f.standard_reading(), Order::strict, Order::weak);
}

bool is_syt(const Filling& f) {
  if (!is_ssyt(f)) return false;
  const Content c = content(f);
  return c.zeros == 0 && c == Content::uniform(1, f.size());
}

Content content(const Filling& f) {
  Content c;
  for (const auto& row : f.rows())
    for (int v : row) {
      if (v == 0) {
        ++c.zeros;
        continue;
      }
      if (static_cast<int>(c.positive.size()) < v) c.positive.resize(static_cast<std::size_t>(v), 0);
      ++c.positive[static_cast<std::size_t>(v - 1)];
    }
  while (!c.positive.empty() && c.positive.back() == 0) c.positive.pop_back();
  return c;
}

Filling rotate180(const Filling& f, Box target) {
  const SkewShape& s = f.shape();
  if (!s.outer().fits(target.rows, target.cols))
    throw TableauError(ErrorKind::dimension, "rotate.fits_box",
                       s.to_string() + " does not fit " + std::to_string(target.rows) + "x" +
                           std::to_string(target.cols));
  const int h = target.rows;
  const int w = target.cols;
  std::vector<int> outer(static_cast<std::size_t>(h));
  std::vector<int> inner(static_cast<std::size_t>(h));
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(h));
  for (int i = 1; i <= h; ++i) {
    const int src = h + 1 - i;
    outer[static_cast<std::size_t>(i - 1)] = w - s.inner().row(src);
    inner[static_cast<std::size_t>(i - 1)] = w - s.outer().row(src);
    if (src <= s.height()) {
      const auto& from = f.rows()[static_cast<std::size_t>(src - 1)];
      rows[static_cast<std::size_t>(i - 1)].assign(from.rbegin(), from.rend());
    }
  }
  // Rows above the source shape rotate to full-width inner rows (no cells).
  const Orientation flipped =
      f.orientation() == Orientation::standard ? Orientation::rotated180 : Orientation::standard;
  return Filling(SkewShape(Partition(std::move(outer)), Partition(std::move(inner))), std::move(rows),
                 flipped, target);
}

Filling invert_alphabet(const Filling& f, int r) {
  std::vector<std::vector<int>> rows = f.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      int& v = rows[i][j];
      if (v > r)
        throw TableauError(ErrorKind::alphabet, "alphabet.max_letter",
                           "entry " + std::to_string(v) + " exceeds " + std::to_string(r),
                           BoxCoord{static_cast<int>(i) + 1,
                                    f.shape().inner().row(static_cast<int>(i) + 1) + 1 + static_cast<int>(j)});
      v = r - v;
    }
  return Filling(f.shape(), std::move(rows), f.orientation(), f.box());
}

BigInt count_syt_hook_length(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  BigInt hooks = 1;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.row(r); ++c) hooks *= (lambda.row(r) - c) + (conj.row(c) - r) + 1;
  return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

namespace {

// Labels are kept per drawn cell of the outer shape while strips are stacked.
class StripFiller {
 public:
  StripFiller(const SkewShape& shape, int first_label)
      : shape_(shape), first_label_(first_label), labels_(static_cast<std::size_t>(shape.height())) {
    for (int r = 1; r <= shape.height(); ++r)
      labels_[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(shape.outer().row(r)), -1);
  }

  void label(const Partition& from, const Partition& to, int value) {
    for (int r = 1; r <= to.length(); ++r)
      for (int c = from.row(r) + 1; c <= to.row(r); ++c)
        labels_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = value;
  }

  Filling emit() const { return emit(shape_.outer()); }

  // Filling of final/inner; `final` must lie inside the outer shape.
  Filling emit(const Partition& final) const {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(final.length()));
    for (int r = 1; r <= final.length(); ++r) {
      const auto& full = labels_[static_cast<std::size_t>(r - 1)];
      rows[static_cast<std::size_t>(r - 1)].assign(full.begin() + shape_.inner().row(r),
                                                   full.begin() + final.row(r));
    }
    return Filling(SkewShape(final, shape_.inner()), std::move(rows));
  }

  int first_label() const noexcept { return first_label_; }
  const SkewShape& shape() const noexcept { return shape_; }

 private:
  const SkewShape& shape_;
  int first_label_;
  std::vector<std::vector<int>> labels_;
};

void stack_strips(StripFiller& filler, const std::vector<Strip>& strips, std::size_t index,
                  const Partition& current, bool exact, std::vector<Filling>& out) {
  if (index == strips.size()) {
    if (!exact)
      out.push_back(filler.emit(current));
    else if (current == filler.shape().outer())
      out.push_back(filler.emit());
    return;
  }
  const Strip& strip = strips[index];
  for (const Partition& next : extensions_within(current, strip.size, strip.kind, filler.shape().outer())) {
    filler.label(current, next, filler.first_label() + static_cast<int>(index));
    stack_strips(filler, strips, index + 1, next, exact, out);
  }
}

struct FreeContentSearch {
  StripFiller& filler;
  StripKind kind;
  Alphabet alphabet;
  const std::optional<Content>& fixed;
  std::vector<Filling>& out;

  void run(int letter, const Partition& current) {
    const int remaining = filler.shape().outer().size() - current.size();
    if (letter > alphabet.high) {
      if (remaining == 0) out.push_back(filler.emit());
      return;
    }
    int low = 0;
    int high = remaining;
    if (fixed) low = high = fixed->of(letter);
    if (letter == alphabet.high) low = std::max(low, remaining);
    for (int k = low; k <= std::min(high, remaining); ++k)
      for (const Partition& next : extensions_within(current, k, kind, filler.shape().outer())) {
        filler.label(current, next, letter);
        run(letter + 1, next);
      }
  }
};

}  // namespace

std::vector<Filling> enumerate_strip_fillings(const SkewShape& shape, const std::vector<Strip>& strips,
                                              int first_label) {
  std::vector<Filling> out;
  StripFiller filler(shape, first_label);
  stack_strips(filler, strips, 0, shape.inner(), true, out);
  return out;
}

std::vector<Filling> enumerate_strip_growths(const Partition& cap, const std::vector<Strip>& strips,
                                             int first_label) {
  std::vector<Filling> out;
  const SkewShape shape(cap);
  StripFiller filler(shape, first_label);
  stack_strips(filler, strips, 0, Partition{}, false, out);
  return out;
}

std::vector<Filling> enumerate_fillings(const SkewShape& shape, FillingKind kind, Alphabet alphabet,
                                        const std::optional<Content>& fixed) {
  std::vector<Filling> out;
  if (alphabet.low < 0 || alphabet.high < alphabet.low) {
    if (shape.size() == 0) out.push_back(Filling(shape, {}));
    return out;
  }
  if (fixed) {
    // Letters outside the alphabet with nonzero multiplicity cannot be placed.
    for (int letter = 0; letter <= static_cast<int>(fixed->positive.size()); ++letter)
      if ((letter < alphabet.low || letter > alphabet.high) && fixed->of(letter) > 0) return out;
  }
  StripFiller filler(shape, alphabet.low);
  FreeContentSearch search{filler, kind == FillingKind::ssyt ? StripKind::row : StripKind::column, alphabet,
                           fixed, out};
  search.run(alphabet.low, shape.inner());
  return out;
}

}  // namespace ltab
