#include "ltab/rsk.hpp"

#include <algorithm>
#include <sstream>

namespace ltab {

void Word::validate() const {
  for (std::size_t i = 0; i < letters.size(); ++i)
    if (letters[i] < 0 || letters[i] > r)
      throw TableauError(ErrorKind::alphabet, "word.alphabet",
                         "letter " + std::to_string(i + 1) + " is " + std::to_string(letters[i]) +
                             ", outside {0.." + std::to_string(r) + "}");
}

std::string Word::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) os << (i ? "," : "") << letters[i];
  return os.str();
}

RskPair rsk_insert(const Word& w) {
  w.validate();
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
  int time = 0;
  for (int letter : w.letters) {
    ++time;
    int carry = letter;
    std::size_t row = 0;
    for (;; ++row) {
      if (row == p.size()) {
        p.push_back({carry});
        q.push_back({time});
        break;
      }
      auto& cells = p[row];
      auto bumped = std::upper_bound(cells.begin(), cells.end(), carry);
      if (bumped == cells.end()) {
        cells.push_back(carry);
        q[row].push_back(time);
        break;
      }
      std::swap(carry, *bumped);
    }
  }
  return {Filling::from_rows(std::move(p)), Filling::from_rows(std::move(q))};
}

Word rsk_inverse(const RskPair& pair, int r) {
  const Filling p = pair.p.standard_reading();
  const Filling q = pair.q.standard_reading();
  if (p.shape() != q.shape() || !p.shape().is_straight())
    throw TableauError(ErrorKind::validation, "rsk.shape_mismatch",
                       "P has shape " + p.shape().to_string() + ", Q has shape " + q.shape().to_string());
  if (!is_syt(q)) throw TableauError(ErrorKind::validation, "rsk.q_standard", "Q is not a standard Young tableau");
  if (!is_ssyt(p)) throw TableauError(ErrorKind::validation, "rsk.p_semistandard", "P is not semistandard");
  if (p.max_entry() > r)
    throw TableauError(ErrorKind::validation, "rsk.p_alphabet",
                       "P uses letter " + std::to_string(p.max_entry()) + " > r=" + std::to_string(r));

  std::vector<std::vector<int>> rows = p.rows();
  const int n = p.size();
  // Row holding each insertion time.
  std::vector<std::size_t> row_of(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < q.rows().size(); ++i)
    for (int t : q.rows()[i]) row_of[static_cast<std::size_t>(t)] = i;

  Word w{r, std::vector<int>(static_cast<std::size_t>(n))};
  for (int t = n; t >= 1; --t) {
    std::size_t row = row_of[static_cast<std::size_t>(t)];
    int carry = rows[row].back();
    rows[row].pop_back();
    while (row > 0) {
      --row;
      auto& cells = rows[row];
      // Rightmost entry strictly smaller than the carried letter.
      auto slot = std::lower_bound(cells.begin(), cells.end(), carry);
      --slot;
      std::swap(carry, *slot);
    }
    w.letters[static_cast<std::size_t>(t - 1)] = carry;
  }
  return w;
}

std::vector<Word> all_words(int r, int n) {
  std::vector<Word> out;
  Word w{r, std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (;;) {
    out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w.letters[static_cast<std::size_t>(i)] == r) w.letters[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++w.letters[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace ltab
