#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ltab/l_prime.hpp"
#include "ltab/l_tableaux.hpp"
#include "ltab/schur.hpp"
#include "ltab/serialize.hpp"
#include "ltab/verify.hpp"

namespace ltab::cli {

namespace {

enum class Format { json, ascii, latex };

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
  std::optional<Json> counterexample;
};

/// What a count or verify run reports. Elapsed time is written to stderr so
/// that stdout stays byte-identical across runs.
struct RunReport {
  std::string command;
  Json params = Json::object();
  std::vector<std::pair<std::string, BigInt>> counts;
  std::vector<Check> checks;

  bool pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct Params {
  std::optional<int> g, r, d, k, i;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag --") + flag);
  return *v;
}

void render(const RunReport& report, Format format, std::ostream& os) {
  if (format == Format::json) {
    Json j;
    j["command"] = report.command;
    j["params"] = report.params;
    Json counts = Json::object();
    for (const auto& [name, value] : report.counts) counts[name] = to_decimal(value);
    j["counts"] = counts;
    Json checks = Json::array();
    for (const Check& c : report.checks) {
      Json cj = {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
      if (c.counterexample) cj["counterexample"] = *c.counterexample;
      checks.push_back(std::move(cj));
    }
    j["checks"] = checks;
    j["pass"] = report.pass();
    os << j.dump(2) << '\n';
    return;
  }
  os << "command: " << report.command << '\n';
  if (!report.params.empty()) {
    os << "params:";
    for (const auto& [key, value] : report.params.items()) os << ' ' << key << '=' << value.dump();
    os << '\n';
  }
  for (const auto& [name, value] : report.counts) os << name << ": " << to_decimal(value) << '\n';
  for (const Check& c : report.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    if (c.counterexample) os << "  counterexample: " << c.counterexample->dump() << '\n';
  }
}

// ---- count -----------------------------------------------------------------

RunReport cmd_count(const std::string& family, const Params& p) {
  RunReport report;
  report.command = "count " + family;
  if (family == "l") {
    const int g = need(p.g, "g"), r = need(p.r, "r"), d = need(p.d, "d");
    report.params = {{"g", g}, {"r", r}, {"d", d}};
    const BigInt count = enumerate_L(g, r, d).size();
    report.counts.emplace_back("count", count);
    if (d >= g + r) {
      const BigInt prediction = power(r + 1, static_cast<unsigned>(g));
      report.counts.emplace_back("prediction", prediction);
      report.checks.push_back({"match", count == prediction, "count equals (r+1)^g", std::nullopt});
    }
  } else if (family == "lprime") {
    const int g = need(p.g, "g"), d = need(p.d, "d"), k = need(p.k, "k");
    report.params = {{"g", g}, {"d", d}, {"k", k}};
    const LPrimeCount c = count_Lprime(g, d, k);
    report.counts.emplace_back("count", c.difference);
    report.counts.emplace_back("positives", c.positives);
    report.counts.emplace_back("negatives", c.negatives);
    report.counts.emplace_back("reduced", c.reduced);
    if (c.integral) report.counts.emplace_back("integral", *c.integral);
    report.checks.push_back({"routes_agree", c.consistent(), "difference, reduced set and integral agree", std::nullopt});
    if (d >= g + k) {
      const BigInt prediction = power(2, static_cast<unsigned>(g));
      report.counts.emplace_back("prediction", prediction);
      report.checks.push_back({"match", c.difference == prediction, "count equals 2^g", std::nullopt});
    }
  } else if (family == "restricted") {
    const int g = need(p.g, "g"), r = need(p.r, "r"), i = need(p.i, "i");
    report.params = {{"g", g}, {"r", r}, {"i", i}};
    const BigInt count = enumerate_restricted_L(g, r, i).size();
    const BigInt prediction = power(r - i + 1, static_cast<unsigned>(g));
    report.counts.emplace_back("count", count);
    report.counts.emplace_back("prediction", prediction);
    report.checks.push_back({"match", count == prediction, "count equals (r-i+1)^g", std::nullopt});
  } else if (family == "castelnuovo") {
    const int g = need(p.g, "g"), r = need(p.r, "r");
    report.params = {{"g", g}, {"r", r}};
    const BigInt count = castelnuovo_number(g, r);
    const BigInt hooks = count_syt_hook_length(Partition::rectangle(r + 1, g / (r + 1)));
    report.counts.emplace_back("count", count);
    report.checks.push_back({"hook_length", count == hooks, "formula equals the hook-length count", std::nullopt});
  } else if (family == "integral-l") {
    const int g = need(p.g, "g"), r = need(p.r, "r"), d = need(p.d, "d");
    report.params = {{"g", g}, {"r", r}, {"d", d}};
    report.counts.emplace_back("count", integral_L(g, r, d));
  } else {
    const int g = need(p.g, "g"), d = need(p.d, "d"), k = need(p.k, "k");
    report.params = {{"g", g}, {"d", d}, {"k", k}};
    report.counts.emplace_back("count", integral_Lprime(g, d, k));
  }
  return report;
}

// ---- enumerate -------------------------------------------------------------

template <class T>
void emit(const T& t, const Json& j, Format format, std::ostream& os, bool first) {
  switch (format) {
    case Format::json: os << j.dump() << '\n'; break;
    case Format::ascii: os << (first ? "" : "\n") << to_ascii(t); break;
    case Format::latex: os << (first ? "" : "\n") << to_latex(t); break;
  }
}

void cmd_enumerate(const std::string& family, const Params& p, const std::string& sign, std::optional<long> limit,
                   Format format, std::ostream& os) {
  const std::size_t cap = limit ? static_cast<std::size_t>(std::max(0L, *limit)) : SIZE_MAX;
  if (family == "l" || family == "restricted") {
    const int g = need(p.g, "g"), r = need(p.r, "r");
    const bool restricted = family == "restricted";
    const int i = restricted ? need(p.i, "i") : 0;
    const auto all = restricted ? enumerate_restricted_L(g, r, i) : enumerate_L(g, r, need(p.d, "d"));
    for (std::size_t n = 0; n < all.size() && n < cap; ++n)
      emit(all[n], restricted ? to_json_restricted(all[n], i) : to_json(all[n]), format, os, n == 0);
  } else {
    const int g = need(p.g, "g"), d = need(p.d, "d"), k = need(p.k, "k");
    const auto all = enumerate_Lprime(g, d, k, sign == "negative" ? Sign::negative : Sign::positive);
    for (std::size_t n = 0; n < all.size() && n < cap; ++n) emit(all[n], to_json(all[n]), format, os, n == 0);
  }
}

// ---- map -------------------------------------------------------------------

Json read_input(const std::string& input, const std::string& inline_json, std::istream& in) {
  std::string text;
  if (!inline_json.empty()) {
    text = inline_json;
  } else if (input == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else if (!input.empty()) {
    std::ifstream file(input);
    if (!file) throw UsageError("cannot read " + input);
    std::ostringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  } else {
    throw UsageError("map needs --input FILE, --input - or --json TEXT");
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw TableauError(ErrorKind::validation, "json.syntax", e.what());
  }
}

std::vector<int> parse_letters(const std::string& text) {
  std::vector<int> letters;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      letters.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad letter \"" + item + "\" in --word");
    }
  }
  return letters;
}

// Flag first, then the input's "params" object.
int param(const std::optional<int>& flag, const Json& j, const char* key) {
  if (flag) return *flag;
  if (j.is_object() && j.contains("params") && j["params"].contains(key) && j["params"][key].is_number_integer())
    return j["params"][key].get<int>();
  throw UsageError(std::string("missing required flag --") + key);
}

void print_word(const Word& w, Format format, std::ostream& os) {
  if (format == Format::json)
    os << to_json(w).dump() << '\n';
  else
    os << w.to_string() << '\n';
}

template <class T>
void print_object(const T& t, Format format, std::ostream& os) {
  if (format == Format::json)
    os << to_json(t).dump() << '\n';
  else if (format == Format::ascii)
    os << to_ascii(t);
  else
    os << to_latex(t);
}

void cmd_map(const std::string& name, const Params& p, const std::string& input, const std::string& inline_json,
             const std::string& word_text, Format format, std::istream& in, std::ostream& os) {
  const bool word_input = name == "word-to-l" || name == "rsk" || name == "binary-to-lprime";
  Json j;
  if (word_input && !word_text.empty()) {
    const int r = name == "binary-to-lprime" ? 1 : need(p.r, "r");
    j = to_json(Word{r, parse_letters(word_text)});
  } else {
    j = read_input(input, inline_json, in);
  }

  if (name == "l-to-word") {
    print_word(l_to_word(l_tableau_from_json(j)), format, os);
  } else if (name == "word-to-l") {
    print_object(word_to_l(word_from_json(j)), format, os);
  } else if (name == "truncate") {
    print_object(truncate(l_tableau_from_json(j)), format, os);
  } else if (name == "phi" || name == "phi-i") {
    const Filling red = filling_from_json(j);
    const int r = param(p.r, j, "r");
    const int g = p.g ? *p.g : (j.contains("params") && j["params"].contains("g") ? param(p.g, j, "g")
                                                                                   : (r > 0 ? red.size() / r : 0));
    if (name == "phi") {
      print_object(phi(red, g, r), format, os);
    } else {
      const int i = param(p.i, j, "i");
      const int gi = p.g ? *p.g : (i > 0 ? red.size() / i : 0);
      print_object(phi_i(red, gi, r, i), format, os);
    }
  } else if (name == "phi-inverse") {
    print_object(phi_inverse(filling_from_json(j), param(p.r, j, "r")), format, os);
  } else if (name == "psi") {
    print_object(psi(lprime_from_json(j)), format, os);
  } else if (name == "rsk") {
    const RskPair pair = rsk_insert(word_from_json(j));
    if (format == Format::json) {
      os << to_json(pair).dump() << '\n';
    } else {
      os << "P:\n";
      print_object(pair.p, format, os);
      os << "Q:\n";
      print_object(pair.q, format, os);
    }
  } else if (name == "rsk-inverse") {
    const int r = p.r ? *p.r : std::max(0, rsk_pair_from_json(j).p.max_entry());
    print_word(rsk_inverse(rsk_pair_from_json(j), r), format, os);
  } else if (name == "lprime-to-binary") {
    print_word(lprime_to_binary(lprime_from_json(j)), format, os);
  } else {
    print_object(binary_to_lprime(word_from_json(j), need(p.d, "d"), need(p.k, "k")), format, os);
  }
}

// ---- verify ----------------------------------------------------------------

RunReport cmd_verify(const std::string& suite, const VerifyBounds& bounds, int threads, const std::string& fault) {
  RunReport report;
  report.command = "verify " + suite;
  report.params = {{"g_max", bounds.g_max}, {"r_max", bounds.r_max}, {"d_slack", bounds.d_slack}, {"k_max", bounds.k_max}};
  VerifyOptions options{bounds, parse_suite(suite), threads, parse_fault(fault)};
  for (CheckResult& c : run_verify(options))
    report.checks.push_back({c.name, c.pass, c.detail, std::move(c.counterexample)});
  return report;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact enumeration and bijections for L- and L'-tableaux", "ltab"};
  app.require_subcommand(1);

  std::string format_name = "json";
  std::string output;
  int threads = 1;
  std::optional<long> seed;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "ascii", "latex"}));
  app.add_option("--output", output, "Write results to FILE instead of stdout");
  app.add_option("--threads", threads, "Worker threads for verify")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Reserved; every operation is deterministic");

  Params params;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--g", params.g, "Genus g");
    sub->add_option("--r", params.r, "Rank r");
    sub->add_option("--d", params.d, "Degree d");
    sub->add_option("--k", params.k, "Ramification k");
    sub->add_option("--i", params.i, "Alphabet cut i");
    sub->fallthrough();
  };

  std::string family;
  auto* count = app.add_subcommand("count", "Exact count for a family");
  count->add_option("family", family)->required()->check(
      CLI::IsMember({"l", "lprime", "restricted", "castelnuovo", "integral-l", "integral-lprime"}));
  add_params(count);

  std::string sign = "positive";
  std::optional<long> limit;
  auto* enumerate = app.add_subcommand("enumerate", "List every tableau of a family");
  enumerate->add_option("family", family)->required()->check(CLI::IsMember({"l", "lprime", "restricted"}));
  enumerate->add_option("--sign", sign, "L' sign")->check(CLI::IsMember({"positive", "negative"}));
  enumerate->add_option("--limit", limit, "Stop after N records")->check(CLI::NonNegativeNumber);
  add_params(enumerate);

  std::string map_name, input, inline_json, word_text;
  auto* map = app.add_subcommand("map", "Apply one of the bijections");
  map->add_option("map", map_name)->required()->check(
      CLI::IsMember({"l-to-word", "word-to-l", "phi", "phi-inverse", "phi-i", "psi", "rsk", "rsk-inverse",
                     "lprime-to-binary", "binary-to-lprime", "truncate"}));
  map->add_option("--input", input, "JSON file, or - for stdin");
  map->add_option("--json", inline_json, "Inline JSON input");
  map->add_option("--word", word_text, "Comma-separated letters, for word inputs");
  add_params(map);

  std::string suite;
  VerifyBounds bounds;
  std::string fault = "none";
  auto* verify = app.add_subcommand("verify", "Run the cross-checks over a parameter box");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember({"counts", "bijections", "oracles", "all"}));
  verify->add_option("--g-max", bounds.g_max, "Largest g");
  verify->add_option("--r-max", bounds.r_max, "Largest r");
  verify->add_option("--d-slack", bounds.d_slack, "Degrees past the threshold");
  verify->add_option("--k-max", bounds.k_max, "Largest k");
  verify->add_option("--inject-fault", fault)->group("");
  verify->fallthrough();

  std::vector<std::string> argv_storage{"ltab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  const Format format = format_name == "ascii" ? Format::ascii : format_name == "latex" ? Format::latex : Format::json;
  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      err << "error: cannot open " << output << " for writing\n";
      return exit_usage;
    }
  }
  std::ostream& os = output.empty() ? out : file;

  const auto start = std::chrono::steady_clock::now();
  int code = exit_ok;
  try {
    std::optional<RunReport> report;
    if (*count) {
      report = cmd_count(family, params);
    } else if (*enumerate) {
      cmd_enumerate(family, params, sign, limit, format, os);
    } else if (*map) {
      cmd_map(map_name, params, input, inline_json, word_text, format, in, os);
    } else {
      report = cmd_verify(suite, bounds, threads, fault);
    }
    if (report) {
      render(*report, format, os);
      if (!report->pass()) code = exit_check_failed;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return exit_usage;
  } catch (const TableauError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  err << "elapsed_ms: " << ms.count() << '\n';
  return code;
}

}  // namespace ltab::cli
