#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltab/serialize.hpp"

namespace ltab {

/// Parameter box swept by the cross-checks. r runs over 1..r_max, k over
/// 2..k_max, g over 0..g_max, and d over d_slack values past the threshold.
struct VerifyBounds {
  int g_max = 3;
  int r_max = 2;
  int d_slack = 2;
  int k_max = 4;
};

enum class Suite { counts, bijections, oracles, all };

/// Deliberate corruption used by the negative tests of the harness.
enum class Fault {
  none,
  drop_tableau,   // enumerate_L loses its last tableau
  corrupt_map,    // word_to_l flips one blue entry
};

struct VerifyOptions {
  VerifyBounds bounds;
  Suite suite = Suite::all;
  int threads = 1;
  Fault fault = Fault::none;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  std::optional<Json> counterexample;
};

/// Runs every check of the suite over the bounds. Cases are swept in
/// increasing (g, r or k, d) so the reported counterexample is the first,
/// smallest failing case. Output order is independent of the thread count.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

Suite parse_suite(const std::string& name);
Fault parse_fault(const std::string& name);

}  // namespace ltab
