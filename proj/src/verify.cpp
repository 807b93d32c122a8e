#include "ltab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "ltab/schur.hpp"

namespace ltab {

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::optional<Json> counterexample;
};

struct Check {
  std::string name;
  std::vector<std::function<Outcome()>> cases;
};

Outcome ok() { return {}; }
Outcome failure(std::string detail, std::optional<Json> counterexample = std::nullopt) {
  return {false, std::move(detail), std::move(counterexample)};
}

std::string params_text(std::initializer_list<std::pair<const char*, int>> params) {
  std::string out;
  for (const auto& [key, value] : params) out += (out.empty() ? "" : " ") + std::string(key) + "=" + std::to_string(value);
  return out;
}

// Complement of lambda in a rows x cols box, read after a half turn.
Partition box_complement(const Partition& lambda, int rows, int cols) {
  std::vector<int> parts;
  for (int j = 1; j <= rows; ++j) parts.push_back(cols - lambda.row(rows + 1 - j));
  return Partition(parts);
}

LTableau word_to_l_faulty(const Word& w, Fault fault) {
  LTableau t = word_to_l(w);
  if (fault != Fault::corrupt_map) return t;
  for (int row = t.grid.rows(); row >= 1; --row)
    for (int col = t.grid.cols(); col >= 1; --col) {
      Cell& cell = t.grid.at({row, col});
      if (cell.kind == CellKind::blue) {
        cell.value = (cell.value + 1) % (t.r + 1);
        return t;
      }
    }
  return t;
}

std::vector<LTableau> enumerate_L_faulty(int g, int r, int d, Fault fault) {
  auto all = enumerate_L(g, r, d);
  if (fault == Fault::drop_tableau && !all.empty()) all.pop_back();
  return all;
}

std::vector<Filling> red_tableaux(int g, int r, int i) {
  const std::vector<Strip> strips(static_cast<std::size_t>(g), Strip{StripKind::column, i});
  return enumerate_strip_growths(Partition::rectangle(r + 1, g), strips, 1);
}

// ---- counts ----------------------------------------------------------------

Outcome l_count_case(int g, int r, int d, Fault fault) {
  const auto all = enumerate_L_faulty(g, r, d, fault);
  const BigInt expected = power(r + 1, static_cast<unsigned>(g));
  if (BigInt(all.size()) == expected) return ok();
  Json cx = {{"params", {{"g", g}, {"r", r}, {"d", d}}},
             {"count", std::to_string(all.size())},
             {"expected", to_decimal(expected)}};
  for (const Word& w : all_words(r, g)) {
    const LTableau t = extend_to_degree(word_to_l(w), d);
    if (std::find(all.begin(), all.end(), t) == all.end()) {
      cx["missing"] = to_json(t);
      break;
    }
  }
  return failure("L(" + params_text({{"g", g}, {"r", r}, {"d", d}}) + ") has " + std::to_string(all.size()) +
                     " tableaux, expected " + to_decimal(expected),
                 cx);
}

Outcome lprime_count_case(int g, int d, int k) {
  const LPrimeCount c = count_Lprime(g, d, k);
  const BigInt expected = power(2, static_cast<unsigned>(g));
  if (c.consistent() && c.difference == expected) return ok();
  return failure("L'(" + params_text({{"g", g}, {"d", d}, {"k", k}}) + "): difference " + to_decimal(c.difference) +
                     ", reduced " + to_decimal(c.reduced) + ", expected " + to_decimal(expected),
                 Json{{"params", {{"g", g}, {"d", d}, {"k", k}}}});
}

Outcome restricted_count_case(int g, int r, int i) {
  const auto all = enumerate_restricted_L(g, r, i);
  const BigInt expected = power(r - i + 1, static_cast<unsigned>(g));
  if (BigInt(all.size()) == expected) return ok();
  return failure("restricted(" + params_text({{"g", g}, {"r", r}, {"i", i}}) + ") has " + std::to_string(all.size()) +
                     ", expected " + to_decimal(expected),
                 Json{{"params", {{"g", g}, {"r", r}, {"i", i}}}});
}

// ---- oracles ---------------------------------------------------------------

Outcome l_integral_case(int g, int r, int d, Fault fault) {
  const std::size_t count = enumerate_L_faulty(g, r, d, fault).size();
  const BigInt dp = integral_L(g, r, d);
  const BigInt slow = integral_L_by_compositions(g, r, d);
  if (dp == slow && dp == BigInt(count)) return ok();
  return failure("L(" + params_text({{"g", g}, {"r", r}, {"d", d}}) + "): enumerated " + std::to_string(count) +
                     ", integral " + to_decimal(dp) + ", composition sum " + to_decimal(slow),
                 Json{{"params", {{"g", g}, {"r", r}, {"d", d}}}});
}

Outcome lprime_integral_case(int g, int d, int k) {
  const LPrimeCount c = count_Lprime(g, d, k);
  if (!c.consistent())
    return failure("L'(" + params_text({{"g", g}, {"d", d}, {"k", k}}) + "): difference " + to_decimal(c.difference) +
                       ", reduced " + to_decimal(c.reduced) +
                       (c.integral ? ", integral " + to_decimal(*c.integral) : std::string()),
                   Json{{"params", {{"g", g}, {"d", d}, {"k", k}}}});
  if ((k + g == 2 * d || k + g == 2 * d + 1) && c.difference != 0)
    return failure("L'(" + params_text({{"g", g}, {"d", d}, {"k", k}}) + ") should vanish",
                   Json{{"params", {{"g", g}, {"d", d}, {"k", k}}}});
  return ok();
}

Outcome castelnuovo_case(int g, int r) {
  const int s = g / (r + 1);
  const BigInt formula = castelnuovo_number(g, r);
  const BigInt hooks = count_syt_hook_length(Partition::rectangle(r + 1, s));
  std::size_t rect = 0;
  for (const Filling& f : red_tableaux(g, r, r))
    if (f.shape().outer() == Partition::rectangle(r + 1, r * g / (r + 1))) ++rect;
  if (formula == hooks && formula == BigInt(rect)) return ok();
  return failure("castelnuovo(" + params_text({{"g", g}, {"r", r}}) + "): formula " + to_decimal(formula) +
                     ", hook length " + to_decimal(hooks) + ", rectangle tableaux " + std::to_string(rect),
                 Json{{"params", {{"g", g}, {"r", r}}}});
}

// ---- bijections ------------------------------------------------------------

Outcome l_word_case(int g, int r, Fault fault) {
  const int d = g + r;
  const auto all = enumerate_L(g, r, d);
  std::set<std::vector<int>> seen;
  for (const LTableau& t : all) {
    const Word w = l_to_word(t);
    if (!seen.insert(w.letters).second)
      return failure("l_to_word is not injective at " + params_text({{"g", g}, {"r", r}}), to_json(t));
    if (word_to_l_faulty(w, fault) != t)
      return failure("word_to_l(l_to_word(t)) != t for word " + w.to_string(), to_json(t));
  }
  for (const Word& w : all_words(r, g)) {
    const LTableau t = word_to_l_faulty(w, fault);
    if (!is_valid(t)) return failure("word_to_l(" + w.to_string() + ") is not a valid L-tableau", to_json(t));
    if (l_to_word(t) != w) return failure("l_to_word(word_to_l(w)) != w for " + w.to_string(), to_json(w));
  }
  if (BigInt(seen.size()) != power(r + 1, static_cast<unsigned>(g)))
    return failure("image of l_to_word has " + std::to_string(seen.size()) + " words");
  return ok();
}

Outcome truncate_case(int g, int r, int d) {
  const auto base = enumerate_L(g, r, g + r);
  const auto high = enumerate_L(g, r, d);
  if (high.size() != base.size())
    return failure("L(" + params_text({{"g", g}, {"r", r}, {"d", d}}) + ") differs in size from d=g+r");
  std::set<std::string> lhs, rhs;
  for (const LTableau& t : base) {
    lhs.insert(to_json(t).dump());
    if (truncate(extend_to_degree(t, d)) != t) return failure("truncate does not undo extend_to_degree", to_json(t));
  }
  for (const LTableau& t : high) rhs.insert(to_json(truncate(t)).dump());
  if (lhs != rhs) return failure("truncate(L(d)) != L(g+r) as sets at " + params_text({{"g", g}, {"r", r}, {"d", d}}));
  return ok();
}

Outcome phi_case(int g, int r) {
  std::set<std::string> images;
  const Box box{r + 1, g};
  for (const Filling& red : red_tableaux(g, r, r)) {
    const Filling purple = phi(red, g, r);
    const Filling s = purple.standard_reading();
    if (!is_syt(s)) return failure("phi output is not standard", to_json(red));
    if (s.shape().outer() != box_complement(red.shape().outer(), box.rows, box.cols))
      return failure("phi output shape is not the complement", to_json(red));
    if (phi_inverse(purple, r) != red) return failure("phi_inverse(phi(R)) != R", to_json(red));
    if (!images.insert(to_json(purple).dump()).second) return failure("phi is not injective", to_json(red));
  }
  return ok();
}

Outcome phi_i_case(int g, int r, int i) {
  const auto domain = red_tableaux(g, r, i);
  const auto codomain = red_tableaux(g, r, r + 1 - i);
  if (domain.size() != codomain.size())
    return failure("TrSSYT sizes differ at " + params_text({{"g", g}, {"r", r}, {"i", i}}));
  std::set<std::string> images;
  for (const Filling& red : domain) {
    const Filling out = phi_i(red, g, r, i);
    if (!is_transposed_ssyt(out) || content(out) != Content::uniform(r + 1 - i, g))
      return failure("phi_i output is not in TrSSYT(g,r,r+1-i)", to_json(red));
    if (out.shape().outer() != box_complement(red.shape().outer(), r + 1, g))
      return failure("phi_i output shape is not the complement", to_json(red));
    if (!images.insert(to_json(out).dump()).second) return failure("phi_i is not injective", to_json(red));
  }
  return ok();
}

Outcome strip_rows_case(int g, int r, int i) {
  const auto restricted = enumerate_restricted_L(g, r, i);
  const auto target = enumerate_L(g, r - i, g + r - i);
  std::set<std::string> images, expected;
  for (const LTableau& t : target) expected.insert(to_json(t).dump());
  for (const LTableau& t : restricted) {
    const LTableau s = strip_bottom_rows(t, i);
    if (!is_valid(s)) return failure("strip_bottom_rows output is invalid", to_json_restricted(t, i));
    if (!images.insert(to_json(s).dump()).second)
      return failure("strip_bottom_rows is not injective", to_json_restricted(t, i));
  }
  if (images != expected)
    return failure("strip_bottom_rows image differs from L(g, r-i) at " + params_text({{"g", g}, {"r", r}, {"i", i}}));
  return ok();
}

Outcome rsk_case(int r, int n) {
  std::set<std::string> pairs;
  for (const Word& w : all_words(r, n)) {
    const RskPair pair = rsk_insert(w);
    if (!is_ssyt(pair.p) || !is_syt(pair.q) || pair.p.shape() != pair.q.shape())
      return failure("rsk_insert output malformed for " + w.to_string(), to_json(w));
    if (pair.p.shape().height() > r + 1) return failure("P taller than r+1 for " + w.to_string(), to_json(w));
    if (rsk_inverse(pair, r) != w) return failure("rsk_inverse(rsk_insert(w)) != w for " + w.to_string(), to_json(w));
    if (!pairs.insert(to_json(pair).dump()).second) return failure("rsk_insert not injective", to_json(w));
  }
  return ok();
}

Outcome psi_case(int g, int d, int k) {
  const auto negatives = enumerate_Lprime(g, d, k, Sign::negative);
  const auto positives = enumerate_Lprime(g, d, k, Sign::positive);
  std::set<std::string> image, marked;
  for (const LPrimeTableau& n : negatives) {
    const LPrimeTableau p = psi(n);
    if (!is_valid(p) || !is_psi_image(p)) return failure("psi output invalid or unmarked", to_json(n));
    if (psi_preimage(p) != n) return failure("psi_preimage(psi(t)) != t", to_json(n));
    image.insert(to_json(p).dump());
  }
  for (const LPrimeTableau& p : positives)
    if (is_psi_image(p)) marked.insert(to_json(p).dump());
  if (image != marked || image.size() != negatives.size())
    return failure("psi image differs from the marked positives at " + params_text({{"g", g}, {"d", d}, {"k", k}}));
  return ok();
}

Outcome binary_case(int g, int d, int k) {
  std::set<std::vector<int>> words;
  for (const LPrimeTableau& p : enumerate_Lprime(g, d, k, Sign::positive)) {
    if (is_psi_image(p)) continue;
    const Word w = lprime_to_binary(p);
    if (!words.insert(w.letters).second) return failure("lprime_to_binary is not injective", to_json(p));
    if (binary_to_lprime(w, d, k) != p) return failure("binary_to_lprime(lprime_to_binary(t)) != t", to_json(p));
  }
  for (const Word& w : all_words(1, g)) {
    const LPrimeTableau p = binary_to_lprime(w, d, k);
    if (!is_valid(p) || is_psi_image(p)) return failure("binary_to_lprime(" + w.to_string() + ") invalid", to_json(w));
    if (lprime_to_binary(p) != w) return failure("round trip fails for " + w.to_string(), to_json(w));
    for (int col = 1; col <= p.width(); ++col)
      if (p.grid.at({1, col}).kind == CellKind::red && p.grid.at({2, col}).kind == CellKind::gray)
        return failure("red and gray share a column", to_json(p));
  }
  if (BigInt(words.size()) != power(2, static_cast<unsigned>(g))) return failure("reduced set is not 2^g");
  return ok();
}

// ---- assembly --------------------------------------------------------------

std::vector<Check> build_checks(const VerifyOptions& o) {
  const VerifyBounds& b = o.bounds;
  const Fault fault = o.fault;
  std::vector<Check> checks;
  const bool counts = o.suite == Suite::counts || o.suite == Suite::all;
  const bool oracles = o.suite == Suite::oracles || o.suite == Suite::all;
  const bool bijections = o.suite == Suite::bijections || o.suite == Suite::all;

  if (counts) {
    Check l{"l.count_closed_form", {}}, lp{"lprime.count_closed_form", {}}, rs{"restricted.count", {}};
    for (int g = 0; g <= b.g_max; ++g) {
      for (int r = 1; r <= b.r_max; ++r) {
        for (int d = g + r; d <= g + r + b.d_slack; ++d) l.cases.push_back([=] { return l_count_case(g, r, d, fault); });
        for (int i = 1; i <= r; ++i) rs.cases.push_back([=] { return restricted_count_case(g, r, i); });
      }
      for (int k = 2; k <= b.k_max; ++k)
        for (int d = g + k; d <= g + k + b.d_slack; ++d) lp.cases.push_back([=] { return lprime_count_case(g, d, k); });
    }
    checks.push_back(std::move(l));
    checks.push_back(std::move(lp));
    checks.push_back(std::move(rs));
  }
  if (oracles) {
    Check l{"l.integral_oracle", {}}, lp{"lprime.integral_oracle", {}}, cn{"castelnuovo.hook_length", {}};
    for (int g = 0; g <= b.g_max; ++g) {
      for (int r = 1; r <= b.r_max; ++r) {
        for (int d = r; d <= g + r + b.d_slack; ++d) l.cases.push_back([=] { return l_integral_case(g, r, d, fault); });
        if (g % (r + 1) == 0) cn.cases.push_back([=] { return castelnuovo_case(g, r); });
      }
      for (int k = 2; k <= b.k_max; ++k)
        for (int d = std::max(k, g + k - 3); d <= g + k + b.d_slack; ++d)
          lp.cases.push_back([=] { return lprime_integral_case(g, d, k); });
    }
    checks.push_back(std::move(l));
    checks.push_back(std::move(lp));
    checks.push_back(std::move(cn));
  }
  if (bijections) {
    Check lw{"l.word_bijection", {}}, tr{"l.truncate", {}}, ph{"phi.bijection", {}}, pi{"phi_i.bijection", {}},
        sr{"restricted.strip_bottom_rows", {}}, rk{"rsk.roundtrip", {}}, ps{"lprime.psi_image", {}},
        bn{"lprime.binary_bijection", {}};
    for (int g = 0; g <= b.g_max; ++g) {
      for (int r = 1; r <= b.r_max; ++r) {
        lw.cases.push_back([=] { return l_word_case(g, r, fault); });
        for (int d = g + r + 1; d <= g + r + b.d_slack; ++d) tr.cases.push_back([=] { return truncate_case(g, r, d); });
        ph.cases.push_back([=] { return phi_case(g, r); });
        for (int i = 1; i <= r; ++i) {
          pi.cases.push_back([=] { return phi_i_case(g, r, i); });
          sr.cases.push_back([=] { return strip_rows_case(g, r, i); });
        }
      }
      for (int k = 2; k <= b.k_max; ++k) {
        for (int d = std::max(k, g + k - 3); d <= g + k + b.d_slack; ++d) {
          if (d - 2 == 0 && g > 0) continue;
          ps.cases.push_back([=] { return psi_case(g, d, k); });
        }
        for (int d = g + k; d <= g + k + b.d_slack; ++d) bn.cases.push_back([=] { return binary_case(g, d, k); });
      }
    }
    for (int r = 1; r <= b.r_max; ++r)
      for (int n = 0; n <= b.g_max + 2; ++n) rk.cases.push_back([=] { return rsk_case(r, n); });
    for (Check* c : {&lw, &tr, &ph, &pi, &sr, &rk, &ps, &bn}) checks.push_back(std::move(*c));
  }
  return checks;
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
  const VerifyBounds& b = options.bounds;
  if (b.g_max < 0 || b.r_max < 1 || b.d_slack < 0 || b.k_max < 2)
    throw TableauError(ErrorKind::parameter, "verify.bounds", "need g_max >= 0, r_max >= 1, d_slack >= 0, k_max >= 2");
  const std::vector<Check> checks = build_checks(options);

  std::vector<const std::function<Outcome()>*> tasks;
  for (const Check& c : checks)
    for (const auto& f : c.cases) tasks.push_back(&f);
  std::vector<Outcome> outcomes(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        outcomes[i] = (*tasks[i])();
      } catch (const std::exception& e) {
        outcomes[i] = failure(std::string("exception: ") + e.what());
      }
    }
  };
  const int threads = std::max(1, options.threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::vector<CheckResult> results;
  std::size_t index = 0;
  for (const Check& c : checks) {
    CheckResult result{c.name, true, std::to_string(c.cases.size()) + " cases", std::nullopt};
    for (std::size_t j = 0; j < c.cases.size(); ++j, ++index) {
      Outcome& o = outcomes[index];
      if (!o.pass && result.pass) {
        result.pass = false;
        result.detail = o.detail;
        result.counterexample = std::move(o.counterexample);
      }
    }
    results.push_back(std::move(result));
  }
  return results;
}

Suite parse_suite(const std::string& name) {
  if (name == "counts") return Suite::counts;
  if (name == "bijections") return Suite::bijections;
  if (name == "oracles") return Suite::oracles;
  if (name == "all") return Suite::all;
  throw TableauError(ErrorKind::parameter, "verify.suite", "unknown suite \"" + name + "\"");
}

Fault parse_fault(const std::string& name) {
  if (name == "none") return Fault::none;
  if (name == "drop-tableau") return Fault::drop_tableau;
  if (name == "corrupt-map") return Fault::corrupt_map;
  throw TableauError(ErrorKind::parameter, "verify.fault", "unknown fault \"" + name + "\"");
}

}  // namespace ltab
