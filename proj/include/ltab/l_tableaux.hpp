#pragma once

#include <vector>

#include "ltab/grid.hpp"
#include "ltab/rsk.hpp"
#include "ltab/tableaux.hpp"

namespace ltab {

/// (r+1) x (d-r) grid holding a red transposed SSYT of content (r^g) in the
/// lower-left and a blue SSYT over {0..r} on the complementary skew shape.
///
/// r = 0 is accepted as a degenerate family (a single all-blue-0 row); it is
/// the target of strip_bottom_rows with i = r.
struct LTableau {
  int g = 0;
  int r = 1;
  int d = 1;
  GridTableau grid;

  int width() const noexcept { return d - r; }
  Box box() const noexcept { return {r + 1, d - r}; }

  /// Red cells as a straight-shape filling.
  Filling red_tableau() const;
  /// Blue cells as drawn, tagged rotated180 in the (r+1) x (d-r) box.
  Filling blue_tableau() const;

  /// Lays a straight red filling and a drawn blue filling onto one grid.
  static LTableau assemble(int g, int r, int d, const Filling& red, const Filling& blue);

  friend bool operator==(const LTableau&, const LTableau&) = default;
};

/// Throws TableauError naming the violated rule ("l.red_rows_strict",
/// "l.blue_columns_strict", ...) and the offending cell.
void validate(const LTableau& t);
bool is_valid(const LTableau& t);

/// All L-tableaux with parameters (g, r, d): red tableaux by vertical-strip
/// recursion over letters 1..g, then blue fillings of each complement by
/// horizontal strips over 0..r.
std::vector<LTableau> enumerate_L(int g, int r, int d);

/// Drops the forced all-blue columns past column g (requires d >= g+r).
LTableau truncate(const LTableau& t);
/// Inverse of truncate: appends forced (0, 1, ..., r) columns up to degree d.
LTableau extend_to_degree(const LTableau& t, int d);

/// Red tableau -> 180-rotated SYT ("purple") in the (r+1) x g box: label i
/// goes as far right as possible in the unique row of R lacking i.
Filling phi(const Filling& red, int g, int r);
/// g is read off the purple tableau's size.
Filling phi_inverse(const Filling& purple, int r);

/// TrSSYT(g, r, i) -> TrSSYT(g, r, r+1-i). Output is a straight,
/// standard-orientation transposed SSYT.
Filling phi_i(const Filling& red, int g, int r, int i);

/// L-tableau with d = g+r -> (r+1)-ary word of length g.
Word l_to_word(const LTableau& t);
/// Word of length g over {0..r} -> L-tableau with parameters (g, r, g+r).
LTableau word_to_l(const Word& w);

/// L-tableaux with parameters (g, r, g+r) whose blue entries are <= r-i.
std::vector<LTableau> enumerate_restricted_L(int g, int r, int i);

/// Removes the bottom i rows (each forced to be red 1..g) of a restricted
/// tableau. The result keeps width g, so its parameters are (g, r-i, g+r-i).
LTableau strip_bottom_rows(const LTableau& t, int i);

}  // namespace ltab
