#include "ltab/l_tableaux.hpp"

#include <algorithm>
#include <string>

namespace ltab {

namespace {

[[noreturn]] void fail(const std::string& invariant, const std::string& detail,
                       std::optional<BoxCoord> cell = std::nullopt) {
  throw TableauError(ErrorKind::validation, invariant, detail, cell);
}

Partition red_shape(const GridTableau& grid) {
  std::vector<int> parts;
  for (int row = 1; row <= grid.rows(); ++row) parts.push_back(grid.leading(row, CellKind::red));
  return Partition(std::move(parts));
}

}  // namespace

Filling LTableau::red_tableau() const {
  std::vector<std::vector<int>> rows;
  for (int row = 1; row <= grid.rows(); ++row) {
    std::vector<int> values;
    for (const Cell& cell : grid.row(row))
      if (cell.kind == CellKind::red) values.push_back(cell.value);
    rows.push_back(std::move(values));
  }
  return Filling::from_rows(std::move(rows));
}

Filling LTableau::blue_tableau() const {
  std::vector<std::vector<int>> rows;
  for (int row = 1; row <= grid.rows(); ++row) {
    std::vector<int> values;
    for (const Cell& cell : grid.row(row))
      if (cell.kind == CellKind::blue) values.push_back(cell.value);
    rows.push_back(std::move(values));
  }
  return Filling(SkewShape(Partition::rectangle(r + 1, width()), red_shape(grid)), std::move(rows),
                 Orientation::rotated180, box());
}

LTableau LTableau::assemble(int g, int r, int d, const Filling& red, const Filling& blue) {
  LTableau t{g, r, d, GridTableau(r + 1, d - r)};
  const Filling straight = red.standard_reading();
  if (!straight.shape().is_straight() || !straight.shape().outer().fits(r + 1, d - r))
    fail("l.red_shape", "red tableau " + straight.shape().to_string() + " does not fit the grid");
  const SkewShape complement(Partition::rectangle(r + 1, d - r), straight.shape().outer());
  if (blue.shape() != complement)
    fail("l.complement", "blue shape " + blue.shape().to_string() + " is not " + complement.to_string());
  for (const BoxCoord c : straight.shape().boxes()) t.grid.at(c) = Cell::red(straight.at(c));
  for (const BoxCoord c : blue.shape().boxes()) t.grid.at(c) = Cell::blue(blue.at(c));
  return t;
}

void validate(const LTableau& t) {
  if (t.g < 0 || t.r < 0 || t.d < t.r)
    throw TableauError(ErrorKind::parameter, "l.parameters", "need g >= 0, r >= 0, d >= r");
  const GridTableau& grid = t.grid;
  if (grid.rows() != t.r + 1 || grid.cols() != t.width())
    fail("l.grid_size", "grid is " + std::to_string(grid.rows()) + "x" + std::to_string(grid.cols()) +
                            ", expected " + std::to_string(t.r + 1) + "x" + std::to_string(t.width()));
  int previous_red = grid.cols();
  for (int row = 1; row <= grid.rows(); ++row) {
    const int red = grid.leading(row, CellKind::red);
    for (int col = 1; col <= grid.cols(); ++col) {
      const Cell& cell = grid.at({row, col});
      if (cell.kind == CellKind::gray) fail("l.cell_kind", "gray cell in an L-tableau", BoxCoord{row, col});
      if (col > red && cell.kind == CellKind::red)
        fail("l.red_justified", "red cell right of a blue cell", BoxCoord{row, col});
    }
    if (red > previous_red) fail("l.red_shape", "red row longer than the row below", BoxCoord{row, red});
    previous_red = red;
  }
  std::vector<int> multiplicity(static_cast<std::size_t>(t.g) + 1, 0);
  for (int row = 1; row <= grid.rows(); ++row)
    for (int col = 1; col <= grid.cols(); ++col) {
      const BoxCoord here{row, col};
      const Cell& cell = grid.at(here);
      const BoxCoord right{row, col + 1};
      const BoxCoord up{row + 1, col};
      const bool has_right = grid.in_bounds(right) && grid.at(right).kind == cell.kind;
      const bool has_up = grid.in_bounds(up) && grid.at(up).kind == cell.kind;
      if (cell.kind == CellKind::red) {
        if (cell.value < 1 || cell.value > t.g) fail("l.red_alphabet", "red entry outside 1..g", here);
        ++multiplicity[static_cast<std::size_t>(cell.value)];
        if (has_right && grid.at(right).value <= cell.value)
          fail("l.red_rows_strict", "red row not strictly increasing", right);
        if (has_up && grid.at(up).value < cell.value)
          fail("l.red_columns_weak", "red column decreases", up);
      } else {
        if (cell.value < 0 || cell.value > t.r) fail("l.blue_alphabet", "blue entry outside 0..r", here);
        if (has_right && grid.at(right).value < cell.value)
          fail("l.blue_rows_weak", "blue row decreases", right);
        if (has_up && grid.at(up).value <= cell.value)
          fail("l.blue_columns_strict", "blue column not strictly increasing", up);
      }
    }
  for (int v = 1; v <= t.g; ++v)
    if (multiplicity[static_cast<std::size_t>(v)] != t.r)
      fail("l.red_content", "red " + std::to_string(v) + " occurs " +
                                std::to_string(multiplicity[static_cast<std::size_t>(v)]) + " times, expected " +
                                std::to_string(t.r));
}

bool is_valid(const LTableau& t) {
  try {
    validate(t);
    return true;
  } catch (const TableauError&) {
    return false;
  }
}

namespace {

void require_params(int g, int r, int d) {
  if (g < 0 || r < 0 || d < r)
    throw TableauError(ErrorKind::parameter, "l.parameters",
                       "need g >= 0, r >= 0, d >= r (got g=" + std::to_string(g) + ", r=" + std::to_string(r) +
                           ", d=" + std::to_string(d) + ")");
}

std::vector<LTableau> enumerate_with_blue_max(int g, int r, int d, int blue_max) {
  require_params(g, r, d);
  const Partition rect = Partition::rectangle(r + 1, d - r);
  const Box box{r + 1, d - r};
  const std::vector<Strip> red_strips(static_cast<std::size_t>(g), Strip{StripKind::column, r});
  std::vector<LTableau> out;
  for (const Filling& red : enumerate_strip_growths(rect, red_strips, 1)) {
    const SkewShape complement(rect, red.shape().outer());
    for (const Filling& blue : enumerate_fillings(complement, FillingKind::ssyt, Alphabet{0, blue_max})) {
      const Filling drawn(blue.shape(), blue.rows(), Orientation::rotated180, box);
      out.push_back(LTableau::assemble(g, r, d, red, drawn));
    }
  }
  return out;
}

}  // namespace

std::vector<LTableau> enumerate_L(int g, int r, int d) { return enumerate_with_blue_max(g, r, d, r); }

LTableau truncate(const LTableau& t) {
  validate(t);
  if (t.d < t.g + t.r)
    throw TableauError(ErrorKind::parameter, "truncate.degree", "truncation needs d >= g+r");
  for (int col = t.g + 1; col <= t.width(); ++col)
    for (int row = 1; row <= t.r + 1; ++row)
      if (t.grid.at({row, col}) != Cell::blue(row - 1))
        throw TableauError(ErrorKind::invariant, "truncate.forced_column",
                           "column past g is not the forced blue column", BoxCoord{row, col});
  return LTableau{t.g, t.r, t.g + t.r, t.grid.columns(1, t.g)};
}

LTableau extend_to_degree(const LTableau& t, int d) {
  if (d < t.d) throw TableauError(ErrorKind::parameter, "extend.degree", "target degree below current degree");
  GridTableau forced(t.r + 1, d - t.d);
  for (int row = 1; row <= t.r + 1; ++row)
    for (int col = 1; col <= forced.cols(); ++col) forced.at({row, col}) = Cell::blue(row - 1);
  return LTableau{t.g, t.r, d, t.grid.append_columns(forced)};
}

namespace {

// Checks R is a straight transposed SSYT of content (multiplicity^g), height <= r+1.
Filling checked_red(const Filling& red, int g, int r, int multiplicity, const char* op) {
  const std::string prefix(op);
  if (r < 0 || g < 0) throw TableauError(ErrorKind::parameter, prefix + ".parameters", "need g, r >= 0");
  Filling straight = red.standard_reading();
  if (!straight.shape().is_straight()) fail(prefix + ".red_shape", "red tableau must be a straight shape");
  if (!is_transposed_ssyt(straight)) fail(prefix + ".red_transposed", "red tableau is not a transposed SSYT");
  if (straight.shape().height() > r + 1)
    fail(prefix + ".red_height", "red tableau has more than r+1 rows");
  const Content c = content(straight);
  if (c.zeros != 0 || c != Content::uniform(multiplicity, g))
    fail(prefix + ".red_content", "content " + c.to_string() + " is not (" + std::to_string(multiplicity) + "^" +
                                      std::to_string(g) + ")");
  return straight;
}

// For each label 1..g, places a box as far right as possible in every row of
// the (r+1) x g box whose red row lacks the label. Returns the drawn 180-rotated filling.
Filling complement_labels(const Filling& red, int g, int r) {
  const int height = r + 1;
  std::vector<std::vector<int>> drawn(static_cast<std::size_t>(height));
  for (int label = 1; label <= g; ++label)
    for (int row = 1; row <= height; ++row) {
      const bool present = row <= red.shape().height() &&
                           std::binary_search(red.rows()[static_cast<std::size_t>(row - 1)].begin(),
                                              red.rows()[static_cast<std::size_t>(row - 1)].end(), label);
      if (!present) {
        auto& cells = drawn[static_cast<std::size_t>(row - 1)];
        cells.insert(cells.begin(), label);
      }
    }
  std::vector<int> inner;
  for (const auto& cells : drawn) inner.push_back(g - static_cast<int>(cells.size()));
  return Filling(SkewShape(Partition::rectangle(height, g), Partition(std::move(inner))), std::move(drawn),
                 Orientation::rotated180, Box{height, g});
}

}  // namespace

Filling phi(const Filling& red, int g, int r) {
  const Filling straight = checked_red(red, g, r, r, "phi");
  return complement_labels(straight, g, r);
}

Filling phi_inverse(const Filling& purple, int r) {
  const Filling s = purple.standard_reading();
  if (!s.shape().is_straight()) fail("phi_inverse.shape", "purple tableau does not read as a straight shape");
  if (!is_syt(s)) fail("phi_inverse.syt", "purple tableau does not read as a standard Young tableau");
  if (s.shape().height() > r + 1) fail("phi_inverse.height", "purple tableau has more than r+1 rows");
  const int g = s.size();
  // A label in standard row j is missing from red row r+2-j.
  std::vector<int> missing_row(static_cast<std::size_t>(g) + 1, 0);
  for (int j = 1; j <= s.shape().height(); ++j)
    for (int label : s.rows()[static_cast<std::size_t>(j - 1)])
      missing_row[static_cast<std::size_t>(label)] = r + 2 - j;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(r + 1));
  for (int label = 1; label <= g; ++label)
    for (int row = 1; row <= r + 1; ++row)
      if (missing_row[static_cast<std::size_t>(label)] != row) rows[static_cast<std::size_t>(row - 1)].push_back(label);
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  Filling red = Filling::from_rows(std::move(rows));
  if (!is_transposed_ssyt(red))
    throw TableauError(ErrorKind::invariant, "phi_inverse.red_transposed", "preimage is not a transposed SSYT");
  return red;
}

Filling phi_i(const Filling& red, int g, int r, int i) {
  if (i < 1 || i > r)
    throw TableauError(ErrorKind::parameter, "phi_i.index", "need 1 <= i <= r");
  const Filling straight = checked_red(red, g, r, i, "phi_i");
  return rotate180(complement_labels(straight, g, r), Box{r + 1, g});
}

Word l_to_word(const LTableau& t) {
  validate(t);
  if (t.d != t.g + t.r)
    throw TableauError(ErrorKind::parameter, "l_to_word.degree", "l_to_word needs d = g+r; truncate first");
  const Filling blue = t.blue_tableau();
  const Filling purple = phi(t.red_tableau(), t.g, t.r);
  if (purple.shape() != blue.shape() || purple.box() != blue.box())
    throw TableauError(ErrorKind::invariant, "l_to_word.shape_mismatch",
                       "purple " + purple.shape().to_string() + " vs blue " + blue.shape().to_string());
  const Filling q = purple.standard_reading();
  const Filling p = invert_alphabet(blue.standard_reading(), t.r);
  return rsk_inverse(RskPair{p, q}, t.r);
}

LTableau word_to_l(const Word& w) {
  w.validate();
  const int g = static_cast<int>(w.letters.size());
  const int r = w.r;
  const Box box{r + 1, g};
  const RskPair pair = rsk_insert(w);
  const Filling blue = rotate180(invert_alphabet(pair.p, r), box);
  const Filling purple = rotate180(pair.q, box);
  const Filling red = phi_inverse(purple, r);
  return LTableau::assemble(g, r, g + r, red, blue);
}

std::vector<LTableau> enumerate_restricted_L(int g, int r, int i) {
  if (i < 0 || i > r) throw TableauError(ErrorKind::parameter, "restricted.index", "need 0 <= i <= r");
  return enumerate_with_blue_max(g, r, g + r, r - i);
}

LTableau strip_bottom_rows(const LTableau& t, int i) {
  validate(t);
  if (i < 0 || i > t.r) throw TableauError(ErrorKind::parameter, "restricted.index", "need 0 <= i <= r");
  if (t.d != t.g + t.r)
    throw TableauError(ErrorKind::parameter, "restricted.degree", "restricted tableaux have d = g+r");
  for (int row = 1; row <= t.r + 1; ++row)
    for (int col = 1; col <= t.width(); ++col) {
      const Cell& cell = t.grid.at({row, col});
      if (cell.kind == CellKind::blue && cell.value > t.r - i)
        fail("restricted.blue_alphabet", "blue entry exceeds r-i", BoxCoord{row, col});
    }
  for (int row = 1; row <= i; ++row)
    for (int col = 1; col <= t.g; ++col)
      if (t.grid.at({row, col}) != Cell::red(col))
        throw TableauError(ErrorKind::invariant, "restricted.forced_row", "bottom row is not red 1..g",
                           BoxCoord{row, col});
  return LTableau{t.g, t.r - i, t.g + t.r - i, t.grid.row_range(i + 1, t.r + 1)};
}

}  // namespace ltab
