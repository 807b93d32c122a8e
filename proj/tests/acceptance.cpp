// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "goldens.hpp"
#include "ltab/l_prime.hpp"
#include "ltab/l_tableaux.hpp"
#include "ltab/schur.hpp"
#include "oracles.hpp"

using namespace ltab;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  int cases = 0;

  void require(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string at(std::initializer_list<std::pair<const char*, int>> params) {
  std::string out;
  for (const auto& [k, v] : params) out += (out.empty() ? "" : " ") + std::string(k) + "=" + std::to_string(v);
  return out;
}

BigInt pow_int(int base, int exp) { return power(base, static_cast<unsigned>(exp)); }

// 1. |enumerate_L(g,r,d)| = (r+1)^g for 0<=g<=5, 1<=r<=3, g+r<=d<=g+r+2.
Verdict l_count() {
  Verdict v;
  for (int g = 0; g <= 5; ++g)
    for (int r = 1; r <= 3; ++r)
      for (int d = g + r; d <= g + r + 2; ++d)
        v.require(BigInt(enumerate_L(g, r, d).size()) == pow_int(r + 1, g), "count at " + at({{"g", g}, {"r", r}, {"d", d}}));
  return v;
}

// 2. Constant counts over d, and truncate(enumerate_L(d)) = enumerate_L(g+r) as sets.
Verdict truncation() {
  Verdict v;
  for (int g = 0; g <= 5; ++g)
    for (int r = 1; r <= 3; ++r) {
      const auto base = enumerate_L(g, r, g + r);
      std::set<std::string> expected;
      for (const LTableau& t : base) expected.insert(oracle::key(t.grid));
      for (int d = g + r; d <= g + r + 2; ++d) {
        const auto all = enumerate_L(g, r, d);
        v.require(all.size() == base.size(), "count varies at " + at({{"g", g}, {"r", r}, {"d", d}}));
        std::set<std::string> got;
        for (const LTableau& t : all) got.insert(oracle::key(truncate(t).grid));
        v.require(got == expected, "truncated set differs at " + at({{"g", g}, {"r", r}, {"d", d}}));
      }
    }
  return v;
}

// 3. l_to_word: enumerate_L(g,r,g+r) -> {0..r}^g bijective with inverse word_to_l, g<=4, r<=3.
Verdict pipeline() {
  Verdict v;
  for (int g = 0; g <= 4; ++g)
    for (int r = 1; r <= 3; ++r) {
      std::set<std::vector<int>> words;
      bool inverse = true;
      for (const LTableau& t : enumerate_L(g, r, g + r)) {
        const Word w = l_to_word(t);
        words.insert(w.letters);
        inverse = inverse && word_to_l(w) == t;
      }
      v.require(inverse, "word_to_l o l_to_word != id at " + at({{"g", g}, {"r", r}}));
      v.require(BigInt(words.size()) == pow_int(r + 1, g), "image size at " + at({{"g", g}, {"r", r}}));
      bool back = true;
      for (const Word& w : all_words(r, g)) back = back && l_to_word(word_to_l(w)) == w;
      v.require(back, "l_to_word o word_to_l != id at " + at({{"g", g}, {"r", r}}));
    }
  return v;
}

// 4. Worked examples, cell for cell.
Verdict goldens() {
  using namespace golden;
  Verdict v;
  const RskPair rsk = rsk_insert(kRskWord);
  v.require(rsk.p == Filling::from_rows(kRskP) && rsk.q == Filling::from_rows(kRskQ), "RSK of 0,2,1,1,0,3,0,0,1");
  v.require(rsk_inverse(rsk, 3) == kRskWord, "inverse RSK of 0,2,1,1,0,3,0,0,1");

  const LTableau ex = l_4_3_9();
  const auto l439 = enumerate_L(4, 3, 9);
  v.require(is_valid(ex) && std::find(l439.begin(), l439.end(), ex) != l439.end(), "L-tableau (4,3,9)");

  const Filling red7 = Filling::from_rows(kRed7);
  v.require(phi(red7, 7, 3) == purple7(), "phi of the g=7 red tableau");
  v.require(phi_inverse(purple7(), 3) == red7, "phi inverse of the g=7 purple tableau");

  const RskPair seven = rsk_insert(kWord7);
  v.require(seven.p == Filling::from_rows(kP7) && seven.q == Filling::from_rows(kQ7), "(P,Q) of 3,2,2,1,0,1,3");
  v.require(invert_alphabet(blue7().standard_reading(), 3) == seven.p, "blue tableau to P");
  v.require(purple7().standard_reading() == seven.q, "purple tableau to Q");
  v.require(l_to_word(l_7_3_10()) == kWord7, "L-tableau (7,3,10) to 3,2,2,1,0,1,3");
  v.require(word_to_l(kWord7) == l_7_3_10(), "3,2,2,1,0,1,3 to L-tableau (7,3,10)");

  v.require(phi(l_5_1_6().red_tableau(), 5, 1) == purple5(), "phi at r=1");
  const RskPair five = rsk_insert(kWord5);
  v.require(five.p == Filling::from_rows(kP5) && five.q == Filling::from_rows(kQ5), "(P,Q) of 0,1,0,0,1");
  v.require(l_to_word(l_5_1_6()) == kWord5 && word_to_l(kWord5) == l_5_1_6(), "L-tableau (5,1,6) and 0,1,0,0,1");

  const auto pos = enumerate_Lprime(3, 7, 4, Sign::positive);
  const auto neg = enumerate_Lprime(3, 7, 4, Sign::negative);
  v.require(std::find(pos.begin(), pos.end(), lprime_positive()) != pos.end(), "positive L' example");
  v.require(std::find(neg.begin(), neg.end(), lprime_negative()) != neg.end(), "negative L' example");
  v.require(psi(lprime_negative()) == lprime_positive(), "psi pairs the two L' examples");

  v.require(!is_psi_image(lprime_reduced()), "reduced L' example outside psi image");
  v.require(lprime_to_binary(lprime_reduced()) == kBinary, "reduced L' example to 1,1,0");
  v.require(binary_to_lprime(kBinary, 7, 4) == lprime_reduced(), "1,1,0 to reduced L' example");
  const RskPair bin = rsk_insert(kBinary);
  v.require(bin.p == Filling::from_rows(kBinaryP) && bin.q == Filling::from_rows(kBinaryQ), "(P,Q) of 1,1,0");

  v.require(phi_i(Filling::from_rows(kPhi3Red), 5, 4, 3) == Filling::from_rows(kPhi3Image), "phi_3 on content (3^5)");
  v.require(phi(Filling::from_rows(kCastelnuovoRed), 10, 4) == castelnuovo_purple(), "Castelnuovo g=10 r=4 phi");
  return v;
}

// 5. count_Lprime = 2^g by three routes for 0<=g<=4, 2<=k<=5, g+k<=d<=g+k+2; 0 when k+g in {2d, 2d+1}.
Verdict lprime_count() {
  Verdict v;
  for (int g = 0; g <= 4; ++g)
    for (int k = 2; k <= 5; ++k)
      for (int d = g + k; d <= g + k + 2; ++d) {
        const LPrimeCount c = count_Lprime(g, d, k);
        const BigInt want = pow_int(2, g);
        v.require(c.difference == want && c.reduced == want && c.integral && *c.integral == want,
                  "three routes at " + at({{"g", g}, {"d", d}, {"k", k}}));
      }
  for (int g = 0; g <= 4; ++g)
    for (int k = 2; k <= 5; ++k)
      for (int d = k; 2 * d <= k + g; ++d)
        if (k + g == 2 * d || k + g == 2 * d + 1) {
          const LPrimeCount c = count_Lprime(g, d, k);
          v.require(c.difference == 0 && c.reduced == 0 && (!c.integral || *c.integral == 0),
                    "vanishing at " + at({{"g", g}, {"d", d}, {"k", k}}));
        }
  return v;
}

// 6. integral_L = |enumerate_L| for g<=4, r<=3, r<=d<=g+r+2; Pieri = brute-force strips in a 3x3 box.
Verdict schubert() {
  Verdict v;
  for (int g = 0; g <= 4; ++g)
    for (int r = 1; r <= 3; ++r)
      for (int d = r; d <= g + r + 2; ++d)
        v.require(integral_L(g, r, d) == BigInt(enumerate_L(g, r, d).size()),
                  "integral vs enumeration at " + at({{"g", g}, {"r", r}, {"d", d}}));
  const Box box{3, 3};
  for (int n = 0; n <= 9; ++n)
    for (const Partition& lambda : oracle::partitions(n, 3, 3))
      for (int size = 0; size <= 3; ++size)
        for (bool horizontal : {true, false}) {
          SchurExpansion seed(box);
          seed.add(lambda, 1);
          const SchurExpansion e =
              multiply_pieri(seed, PieriFactor{horizontal ? StripKind::row : StripKind::column, size});
          bool same = true;
          for (int m = 0; m <= 9; ++m)
            for (const Partition& nu : oracle::partitions(m, 3, 3))
              same = same && e.coefficient(nu) == oracle::chain_count(lambda, {{horizontal, size}}, nu, 3, 3);
          v.require(same, "Pieri at " + lambda.to_string() + (horizontal ? " row " : " column ") + std::to_string(size));
        }
  return v;
}

// 7. Castelnuovo numbers against hook lengths and rectangle tableaux.
Verdict castelnuovo() {
  Verdict v;
  for (const auto& [g, r] : std::vector<std::pair<int, int>>{{2, 1}, {4, 1}, {3, 2}, {6, 2}, {4, 3}}) {
    const int s = g / (r + 1);
    const BigInt c = castelnuovo_number(g, r);
    v.require(c == count_syt_hook_length(Partition::rectangle(r + 1, s)), "hook length at " + at({{"g", g}, {"r", r}}));
    v.require(c == oracle::syt_count(Partition::rectangle(r + 1, s)), "SYT count at " + at({{"g", g}, {"r", r}}));
    std::size_t rectangles = 0;
    for (const auto& rows : oracle::trssyt(g, r, r))
      if (Filling::from_rows(rows).shape().outer() == Partition::rectangle(r + 1, r * s)) ++rectangles;
    v.require(c == BigInt(rectangles), "rectangle TrSSYT at " + at({{"g", g}, {"r", r}}));
  }
  v.require(castelnuovo_number(10, 4) == 42, "castelnuovo(10,4) = 42");
  return v;
}

// 8. phi_i bijective with complementary shapes; restricted count and strip_bottom_rows bijection.
Verdict restricted() {
  Verdict v;
  for (int g = 0; g <= 4; ++g)
    for (int r = 1; r <= 3; ++r)
      for (int i = 1; i <= r; ++i) {
        std::set<std::string> codomain, images;
        for (const auto& rows : oracle::trssyt(g, r, r + 1 - i)) codomain.insert(Filling::from_rows(rows).to_string());
        bool complementary = true;
        const auto domain = oracle::trssyt(g, r, i);
        for (const auto& rows : domain) {
          const Filling red = Filling::from_rows(rows);
          const Filling out = phi_i(red, g, r, i);
          for (int row = 1; row <= r + 1; ++row)
            complementary = complementary && red.shape().outer().row(row) + out.shape().outer().row(r + 2 - row) == g;
          images.insert(out.to_string());
        }
        const std::string where = at({{"g", g}, {"r", r}, {"i", i}});
        v.require(images.size() == domain.size() && images == codomain, "phi_i bijection at " + where);
        v.require(complementary, "phi_i complementarity at " + where);

        const auto tableaux = enumerate_restricted_L(g, r, i);
        v.require(BigInt(tableaux.size()) == pow_int(r - i + 1, g), "restricted count at " + where);
        std::set<std::string> stripped, target;
        bool valid = true;
        for (const LTableau& t : tableaux) {
          const LTableau s = strip_bottom_rows(t, i);
          valid = valid && is_valid(s);
          stripped.insert(oracle::key(s.grid));
        }
        for (const LTableau& t : enumerate_L(g, r - i, g + r - i)) target.insert(oracle::key(t.grid));
        v.require(valid && stripped.size() == tableaux.size() && stripped == target,
                  "strip_bottom_rows bijection at " + where);
      }
  return v;
}

// 9. RSK round trip, cardinality and height for n<=6, r<=3.
Verdict rsk_suite() {
  Verdict v;
  for (int r = 0; r <= 3; ++r)
    for (int n = 0; n <= 6; ++n) {
      std::set<std::string> pairs;
      bool round_trip = true, height = true, shapes = true;
      for (const Word& w : all_words(r, n)) {
        const RskPair p = rsk_insert(w);
        round_trip = round_trip && rsk_inverse(p, r) == w;
        height = height && p.p.shape().height() <= r + 1;
        shapes = shapes && is_ssyt(p.p) && is_syt(p.q) && p.p.shape() == p.q.shape();
        pairs.insert(p.p.to_string() + "|" + p.q.to_string());
      }
      const std::string where = at({{"r", r}, {"n", n}});
      v.require(round_trip, "round trip at " + where);
      v.require(height, "height bound at " + where);
      v.require(shapes, "pair validity at " + where);
      v.require(BigInt(pairs.size()) == pow_int(r + 1, n), "cardinality at " + where);
      BigInt valid_pairs = 0;
      for (const Partition& lambda : oracle::partitions(n, r + 1, n))
        valid_pairs += BigInt(oracle::tableaux(lambda, Partition(), 0, r, false).size()) * oracle::syt_count(lambda);
      v.require(valid_pairs == BigInt(pairs.size()), "image equals all valid pairs at " + where);
    }
  return v;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "L-count theorem", 60, l_count},
      {2, "truncation", 30, truncation},
      {3, "pipeline bijection", 60, pipeline},
      {4, "worked examples", 5, goldens},
      {5, "L' theorem", 120, lprime_count},
      {6, "Schubert oracle equality", 60, schubert},
      {7, "Castelnuovo", 60, castelnuovo},
      {8, "phi_i and restricted", 60, restricted},
      {9, "RSK property suite", 30, rsk_suite},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = v.pass && in_time;
    if (!pass) ++failures;
    std::string detail = v.pass ? std::to_string(v.cases) + " checks" : v.detail;
    if (!in_time) detail += "; over time limit";
    std::printf("%s criterion %d (%s): %s [%.2fs / %.0fs]\n", pass ? "PASS" : "FAIL", c.number, c.name, detail.c_str(),
                seconds, c.limit_seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
