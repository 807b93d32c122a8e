#include "ltab/l_prime.hpp"

#include <string>

#include "ltab/schur.hpp"

namespace ltab {

const char* to_string(Sign sign) noexcept { return sign == Sign::positive ? "positive" : "negative"; }

namespace {

[[noreturn]] void fail(const std::string& invariant, const std::string& detail,
                       std::optional<BoxCoord> cell = std::nullopt) {
  throw TableauError(ErrorKind::validation, invariant, detail, cell);
}

void require_params(int g, int d, int k) {
  if (g < 0 || k < 2 || k > d)
    throw TableauError(ErrorKind::parameter, "lprime.parameters",
                       "need g >= 0 and 2 <= k <= d (got g=" + std::to_string(g) + ", d=" + std::to_string(d) +
                           ", k=" + std::to_string(k) + ")");
}

// Shape covered by red and blue cells: full bottom row, top row short of the gray cells.
Partition non_gray_shape(int width, int gray) { return Partition({width, width - gray}); }

}  // namespace

Filling LPrimeTableau::red_tableau() const {
  std::vector<std::vector<int>> rows;
  for (int row = 1; row <= grid.rows(); ++row) {
    std::vector<int> values;
    for (const Cell& cell : grid.row(row))
      if (cell.kind == CellKind::red) values.push_back(cell.value);
    rows.push_back(std::move(values));
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return Filling::from_rows(std::move(rows));
}

void validate(const LPrimeTableau& t) {
  require_params(t.g, t.d, t.k);
  const GridTableau& grid = t.grid;
  const int width = t.width();
  const int gray = t.gray_count();
  if (grid.rows() != 2 || grid.cols() != width)
    fail("lprime.grid_size", "grid is " + std::to_string(grid.rows()) + "x" + std::to_string(grid.cols()) +
                                 ", expected 2x" + std::to_string(width));
  for (int row = 1; row <= 2; ++row)
    for (int col = 1; col <= width; ++col) {
      const bool should_be_gray = row == 2 && col > width - gray;
      if ((grid.at({row, col}).kind == CellKind::gray) != should_be_gray)
        fail("lprime.gray_placement",
             should_be_gray ? "expected a gray cell" : "gray cell outside the top-right run", BoxCoord{row, col});
    }
  const int red_bottom = grid.leading(1, CellKind::red);
  const int red_top = grid.leading(2, CellKind::red);
  for (int row = 1; row <= 2; ++row)
    if (grid.count(row, CellKind::red) != (row == 1 ? red_bottom : red_top))
      fail("lprime.red_justified", "red cells must be left-justified", BoxCoord{row, grid.leading(row, CellKind::red) + 1});
  if (red_top > red_bottom) fail("lprime.red_shape", "red top row longer than bottom row", BoxCoord{2, red_top});
  std::vector<int> seen(static_cast<std::size_t>(t.g) + 1, 0);
  for (int row = 1; row <= 2; ++row)
    for (int col = 1; col <= width; ++col) {
      const BoxCoord here{row, col};
      const Cell& cell = grid.at(here);
      const BoxCoord right{row, col + 1};
      const BoxCoord up{row + 1, col};
      const bool same_right = grid.in_bounds(right) && grid.at(right).kind == cell.kind;
      const bool same_up = grid.in_bounds(up) && grid.at(up).kind == cell.kind;
      if (cell.kind == CellKind::red) {
        if (cell.value < 1 || cell.value > t.g) fail("lprime.red_content", "red entry outside 1..g", here);
        if (seen[static_cast<std::size_t>(cell.value)]++)
          fail("lprime.red_content", "red entry repeated", here);
        if (same_right && grid.at(right).value <= cell.value) fail("lprime.red_rows", "red row not increasing", right);
        if (same_up && grid.at(up).value <= cell.value) fail("lprime.red_columns", "red column not increasing", up);
      } else if (cell.kind == CellKind::blue) {
        if (cell.value != 0 && cell.value != 1) fail("lprime.blue_alphabet", "blue entry outside {0,1}", here);
        if (same_right && grid.at(right).value < cell.value) fail("lprime.blue_rows_weak", "blue row decreases", right);
        if (same_up && grid.at(up).value <= cell.value)
          fail("lprime.blue_columns_strict", "blue column not strictly increasing", up);
      }
    }
  if (red_bottom + red_top != t.g) fail("lprime.red_content", "red tableau must have exactly g cells");
}

bool is_valid(const LPrimeTableau& t) {
  try {
    validate(t);
    return true;
  } catch (const TableauError&) {
    return false;
  }
}

std::vector<LPrimeTableau> enumerate_Lprime(int g, int d, int k, Sign sign) {
  require_params(g, d, k);
  LPrimeTableau proto{sign, g, d, k, {}};
  const int width = proto.width();
  const int gray = proto.gray_count();
  const Partition cap = non_gray_shape(width, gray);
  const std::vector<Strip> red_strips(static_cast<std::size_t>(g), Strip{StripKind::column, 1});
  std::vector<LPrimeTableau> out;
  for (const Filling& red : enumerate_strip_growths(cap, red_strips, 1)) {
    const SkewShape blue_shape(cap, red.shape().outer());
    for (const Filling& blue : enumerate_fillings(blue_shape, FillingKind::ssyt, Alphabet{0, 1})) {
      LPrimeTableau t = proto;
      t.grid = GridTableau(2, width, Cell::gray());
      for (const BoxCoord c : red.shape().boxes()) t.grid.at(c) = Cell::red(red.at(c));
      for (const BoxCoord c : blue.shape().boxes()) t.grid.at(c) = Cell::blue(blue.at(c));
      out.push_back(std::move(t));
    }
  }
  return out;
}

LPrimeTableau psi(const LPrimeTableau& negative) {
  validate(negative);
  if (negative.sign != Sign::negative) fail("psi.sign", "psi takes a negative tableau");
  GridTableau column(2, 1);
  column.at({1, 1}) = Cell::blue(1);
  column.at({2, 1}) = Cell::gray();
  return LPrimeTableau{Sign::positive, negative.g, negative.d, negative.k, negative.grid.append_columns(column)};
}

bool is_psi_image(const LPrimeTableau& positive) {
  for (int col = 1; col <= positive.grid.cols(); ++col)
    if (positive.grid.at({1, col}) == Cell::blue(1)) return true;
  return false;
}

LPrimeTableau psi_preimage(const LPrimeTableau& positive) {
  validate(positive);
  if (positive.sign != Sign::positive) fail("psi.sign", "psi preimage takes a positive tableau");
  if (!is_psi_image(positive)) fail("psi.image", "bottom row holds no blue 1");
  return LPrimeTableau{Sign::negative, positive.g, positive.d, positive.k,
                       positive.grid.columns(1, positive.grid.cols() - 1)};
}

LPrimeCount count_Lprime(int g, int d, int k) {
  require_params(g, d, k);
  const auto positives = enumerate_Lprime(g, d, k, Sign::positive);
  const auto negatives = enumerate_Lprime(g, d, k, Sign::negative);
  LPrimeCount out;
  out.positives = positives.size();
  out.negatives = negatives.size();
  out.difference = out.positives - out.negatives;
  for (const auto& t : positives)
    if (!is_psi_image(t)) ++out.reduced;
  if (k + g <= 2 * d + 1) out.integral = integral_Lprime(g, d, k);
  return out;
}

Word lprime_to_binary(const LPrimeTableau& t) {
  validate(t);
  if (t.sign != Sign::positive) fail("lprime_to_binary.sign", "needs a positive tableau");
  if (t.d < t.g + t.k)
    throw TableauError(ErrorKind::parameter, "lprime_to_binary.degree", "needs d >= g+k");
  for (int col = 1; col <= t.grid.cols(); ++col)
    if (t.grid.at({1, col}) == Cell::blue(1))
      fail("lprime_to_binary.reduced", "bottom row holds a blue 1", BoxCoord{1, col});
  const Filling q = t.red_tableau();
  const Box box{2, t.g};
  const GridTableau head = t.grid.columns(1, t.g);
  std::vector<std::vector<int>> rows(2);
  for (int row = 1; row <= 2; ++row)
    for (const Cell& cell : head.row(row))
      if (cell.kind == CellKind::blue) rows[static_cast<std::size_t>(row - 1)].push_back(cell.value);
  const Filling blue(SkewShape(Partition::rectangle(2, t.g), q.shape().outer()), std::move(rows),
                     Orientation::rotated180, box);
  const Filling p = invert_alphabet(blue.standard_reading(), 1);
  return rsk_inverse(RskPair{p, q}, 1);
}

LPrimeTableau binary_to_lprime(const Word& w, int d, int k) {
  if (w.r != 1) throw TableauError(ErrorKind::alphabet, "binary.alphabet", "binary words have r = 1");
  w.validate();
  const int g = static_cast<int>(w.letters.size());
  require_params(g, d, k);
  if (d < g + k) throw TableauError(ErrorKind::parameter, "binary_to_lprime.degree", "needs d >= g+k");
  const RskPair pair = rsk_insert(w);
  const Filling blue = rotate180(invert_alphabet(pair.p, 1), Box{2, g});
  LPrimeTableau t{Sign::positive, g, d, k, GridTableau(2, d - 1)};
  for (const BoxCoord c : pair.q.shape().boxes()) t.grid.at(c) = Cell::red(pair.q.at(c));
  for (const BoxCoord c : blue.shape().boxes()) t.grid.at(c) = Cell::blue(blue.at(c));
  const int first_gray = t.width() - t.gray_count() + 1;
  for (int col = g + 1; col <= t.width(); ++col) {
    t.grid.at({1, col}) = Cell::blue(0);
    t.grid.at({2, col}) = col >= first_gray ? Cell::gray() : Cell::blue(1);
  }
  return t;
}

}  // namespace ltab
