#pragma once

#include <optional>
#include <vector>

#include "ltab/bigint.hpp"
#include "ltab/grid.hpp"
#include "ltab/rsk.hpp"
#include "ltab/tableaux.hpp"

namespace ltab {

enum class Sign { positive, negative };

const char* to_string(Sign sign) noexcept;

/// Two-row grid of width d-1 (positive) or d-2 (negative): a red SYT of size
/// g in the lower-left, gray on the rightmost k-1 (resp. k-2) top-row cells,
/// and a blue {0,1} skew SSYT on the rest.
///
/// Validity is the strip-sequence reading of the Pieri product: red SYT, then
/// a horizontal strip of blue 0s, then of blue 1s, then the gray strip, tiling
/// the grid.
struct LPrimeTableau {
  Sign sign = Sign::positive;
  int g = 0;
  int d = 2;
  int k = 2;
  GridTableau grid;

  int width() const noexcept { return sign == Sign::positive ? d - 1 : d - 2; }
  int gray_count() const noexcept { return sign == Sign::positive ? k - 1 : k - 2; }

  Filling red_tableau() const;

  friend bool operator==(const LPrimeTableau&, const LPrimeTableau&) = default;
};

/// Throws TableauError naming the violated rule ("lprime.gray_placement", ...).
void validate(const LPrimeTableau& t);
bool is_valid(const LPrimeTableau& t);

/// Requires g >= 0 and 2 <= k <= d.
std::vector<LPrimeTableau> enumerate_Lprime(int g, int d, int k, Sign sign);

/// Appends a column (bottom blue 1, top gray) to a negative tableau.
LPrimeTableau psi(const LPrimeTableau& negative);

/// True iff the bottom row holds a blue 1.
bool is_psi_image(const LPrimeTableau& positive);
/// Removes the last column of a tableau in the image of psi.
LPrimeTableau psi_preimage(const LPrimeTableau& positive);

/// The signed count computed three ways.
struct LPrimeCount {
  BigInt positives;
  BigInt negatives;
  BigInt difference;   // |positives| - |negatives|
  BigInt reduced;      // positives without a blue 1 in the bottom row
  std::optional<BigInt> integral;  // Schubert oracle; absent when k+g > 2d+1

  bool consistent() const { return difference == reduced && (!integral || *integral == difference); }
};

LPrimeCount count_Lprime(int g, int d, int k);

/// Positive tableau with no blue 1 in the bottom row and d >= g+k -> binary word.
Word lprime_to_binary(const LPrimeTableau& t);
/// Binary word of length g -> positive tableau (requires d >= g+k).
LPrimeTableau binary_to_lprime(const Word& w, int d, int k);

}  // namespace ltab
