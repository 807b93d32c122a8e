#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "goldens.hpp"
#include "ltab/serialize.hpp"

using namespace ltab;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  const int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::vector<Json> json_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream ss(text);
  for (std::string line; std::getline(ss, line);)
    if (!line.empty()) out.push_back(Json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("count") {
  Run r = run({"count", "l", "--g", "4", "--r", "3", "--d", "9"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["counts"]["count"] == "256");
  CHECK(j["counts"]["prediction"] == "256");
  CHECK(j["checks"][0]["name"] == "match");
  CHECK(j["checks"][0]["pass"] == true);

  r = run({"count", "castelnuovo", "--g", "10", "--r", "4"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["counts"]["count"] == "42");

  r = run({"count", "lprime", "--g", "3", "--d", "7", "--k", "4", "--format", "ascii"});
  CHECK(r.code == 0);
  CHECK(r.out.find("count: 8\n") != std::string::npos);
  CHECK(r.out.find("prediction: 8\n") != std::string::npos);
  CHECK(r.out.find("PASS match") != std::string::npos);

  r = run({"count", "restricted", "--g", "2", "--r", "2", "--i", "1"});
  CHECK(Json::parse(r.out)["counts"]["count"] == "4");
  r = run({"count", "integral-l", "--g", "2", "--r", "2", "--d", "6"});
  CHECK(Json::parse(r.out)["counts"]["count"] == "9");
  r = run({"count", "integral-lprime", "--g", "0", "--d", "2", "--k", "2"});
  CHECK(Json::parse(r.out)["counts"]["count"] == "1");
  r = run({"count", "l", "--g", "2", "--r", "2", "--d", "3"});
  CHECK(r.code == 0);
  CHECK_FALSE(Json::parse(r.out)["counts"].contains("prediction"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"count", "l", "--g", "4"}).code == 2);
  CHECK(run({"count", "bogus"}).code == 2);
  CHECK(run({"enumerate", "l", "--g", "1", "--r", "1", "--d", "2", "--format", "pdf"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"count", "l", "--g", "1", "--r", "3", "--d", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("enumerate") {
  Run r = run({"enumerate", "l", "--g", "2", "--r", "1", "--d", "3", "--format", "ascii"});
  CHECK(r.code == 0);
  std::size_t grids = 0;
  for (std::size_t pos = 0; (pos = r.out.find("L-tableau", pos)) != std::string::npos; ++pos) ++grids;
  CHECK(grids == 4);

  r = run({"enumerate", "lprime", "--g", "0", "--d", "2", "--k", "2", "--sign", "positive"});
  CHECK(json_lines(r.out).size() == 2);
  r = run({"enumerate", "lprime", "--g", "0", "--d", "2", "--k", "2", "--sign", "negative"});
  CHECK(json_lines(r.out).size() == 1);

  r = run({"enumerate", "l", "--g", "3", "--r", "2", "--d", "5", "--limit", "1"});
  CHECK(r.code == 0);
  const auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(l_tableau_from_json(lines.front()) == enumerate_L(3, 2, 5).front());

  r = run({"enumerate", "restricted", "--g", "2", "--r", "2", "--i", "1"});
  CHECK(json_lines(r.out).size() == 4);
  CHECK(json_lines(r.out).front()["family"] == "restricted");

  r = run({"enumerate", "lprime", "--g", "1", "--d", "3", "--k", "2", "--format", "latex"});
  CHECK(r.out.find("\\begin{ytableau}") != std::string::npos);
}

TEST_CASE("map") {
  Run r = run({"map", "rsk", "--word", "0,2,1,1,0,3,0,0,1", "--r", "3"});
  CHECK(r.code == 0);
  CHECK(rsk_pair_from_json(Json::parse(r.out)) ==
        RskPair{Filling::from_rows(golden::kRskP), Filling::from_rows(golden::kRskQ)});

  r = run({"map", "l-to-word", "--json", to_json(golden::l_7_3_10()).dump()});
  CHECK(word_from_json(Json::parse(r.out)) == golden::kWord7);
  r = run({"map", "l-to-word", "--input", "-", "--format", "ascii"}, to_json(golden::l_7_3_10()).dump());
  CHECK(r.out == "3,2,2,1,0,1,3\n");

  Json red = to_json(Filling::from_rows(golden::kRed7));
  r = run({"map", "phi", "--json", red.dump(), "--r", "3"});
  CHECK(filling_from_json(Json::parse(r.out)) == golden::purple7());
  red["params"] = {{"g", 7}, {"r", 3}};
  r = run({"map", "phi", "--json", red.dump()});
  CHECK(filling_from_json(Json::parse(r.out)) == golden::purple7());
  r = run({"map", "phi-inverse", "--json", to_json(golden::purple7()).dump(), "--r", "3"});
  CHECK(filling_from_json(Json::parse(r.out)) == Filling::from_rows(golden::kRed7));

  r = run({"map", "phi-i", "--json", to_json(Filling::from_rows(golden::kPhi3Red)).dump(), "--r", "4", "--i", "3"});
  CHECK(filling_from_json(Json::parse(r.out)) == Filling::from_rows(golden::kPhi3Image));

  r = run({"map", "word-to-l", "--word", "3,2,2,1,0,1,3", "--r", "3"});
  CHECK(l_tableau_from_json(Json::parse(r.out)) == golden::l_7_3_10());
  r = run({"map", "truncate", "--json", to_json(golden::l_4_3_9()).dump()});
  CHECK(l_tableau_from_json(Json::parse(r.out)).d == 7);
  r = run({"map", "psi", "--json", to_json(golden::lprime_negative()).dump()});
  CHECK(lprime_from_json(Json::parse(r.out)) == golden::lprime_positive());
  r = run({"map", "lprime-to-binary", "--json", to_json(golden::lprime_reduced()).dump(), "--format", "ascii"});
  CHECK(r.out == "1,1,0\n");
  r = run({"map", "binary-to-lprime", "--word", "1,1,0", "--d", "7", "--k", "4"});
  CHECK(lprime_from_json(Json::parse(r.out)) == golden::lprime_reduced());
  r = run({"map", "rsk-inverse", "--json", to_json(rsk_insert(golden::kWord7)).dump(), "--r", "3"});
  CHECK(word_from_json(Json::parse(r.out)) == golden::kWord7);
}

TEST_CASE("map reports violated invariants") {
  Json bad = to_json(golden::l_4_3_9());
  bad["grid"][0][4]["value"] = 3;
  const Run r = run({"map", "truncate", "--json", bad.dump()});
  CHECK(r.code == 2);
  CHECK(r.err.find("l.blue_rows_weak") != std::string::npos);
  CHECK(r.err.find("(row 1, col 6)") != std::string::npos);
  CHECK(run({"map", "rsk", "--json", "{not json"}).code == 2);
  CHECK(run({"map", "rsk"}).code == 2);
  CHECK(run({"map", "rsk", "--input", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("verify") {
  Run r = run({"verify", "all", "--g-max", "3", "--r-max", "2", "--d-slack", "2", "--k-max", "4", "--threads", "2"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() == 14);
  for (const Json& c : j["checks"]) CHECK(c["pass"] == true);

  CHECK(run({"verify", "counts", "--g-max", "0", "--r-max", "1", "--d-slack", "0", "--k-max", "2"}).code == 0);

  r = run({"verify", "counts", "--g-max", "2", "--r-max", "1", "--d-slack", "0", "--k-max", "2", "--inject-fault",
           "drop-tableau"});
  CHECK(r.code == 1);
  const Json failed = Json::parse(r.out);
  CHECK(failed["pass"] == false);
  const Json& check = failed["checks"][0];
  CHECK(check["pass"] == false);
  CHECK(check["counterexample"]["params"]["g"] == 0);
  CHECK(check["counterexample"]["missing"]["family"] == "l");

  r = run({"verify", "bijections", "--g-max", "2", "--r-max", "1", "--d-slack", "0", "--k-max", "2",
           "--inject-fault", "corrupt-map"});
  CHECK(r.code == 1);
  bool found = false;
  const Json corrupted = Json::parse(r.out);
  for (const Json& c : corrupted["checks"])
    if (c["name"] == "l.word_bijection") {
      CHECK(c["pass"] == false);
      CHECK(c["counterexample"]["family"] == "l");
      found = true;
    }
  CHECK(found);
  CHECK(run({"verify", "all", "--r-max", "0"}).code == 2);
}

TEST_CASE("deterministic output") {
  const std::vector<std::string> args{"verify", "all", "--g-max", "2", "--r-max", "2", "--d-slack", "1", "--k-max", "3"};
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  CHECK(run(args).out == run(args).out);
  CHECK(run(args).out == run(threaded).out);
  const std::vector<std::string> listing{"enumerate", "l", "--g", "3", "--r", "2", "--d", "6", "--format", "latex"};
  CHECK(run(listing).out == run(listing).out);
}
