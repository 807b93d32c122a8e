#pragma once

#include <string>
#include <vector>

#include "ltab/tableaux.hpp"

namespace ltab {

/// Finite sequence over {0, ..., r}.
struct Word {
  int r = 0;
  std::vector<int> letters;

  /// Throws TableauError(alphabet) when a letter is outside {0..r}.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
};

/// P semistandard over {0..r}, Q standard, both straight and of equal shape.
struct RskPair {
  Filling p;
  Filling q;

  friend bool operator==(const RskPair&, const RskPair&) = default;
};

/// Schensted row insertion: each letter bumps the leftmost entry strictly
/// greater than it; Q records insertion times 1..n.
RskPair rsk_insert(const Word& w);

/// Reverse bumping driven by Q's entries n, ..., 1. Throws TableauError with
/// invariant "rsk.shape_mismatch", "rsk.q_standard", "rsk.p_semistandard" or
/// "rsk.p_alphabet".
Word rsk_inverse(const RskPair& pair, int r);

/// All words of length n over {0..r} in lexicographic order.
std::vector<Word> all_words(int r, int n);

}  // namespace ltab
