#pragma once

#include <map>
#include <string>
#include <vector>

#include "kmroot/cartan.hpp"

namespace kmroot {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;   // brief summary; minimal counterexample on failure
  double wall_ms = 0.0;
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

struct VerifyOptions {
  unsigned seed = 20260816;  // reflection-invariance sampling
  int random_triples = 10000;
  bool parallel = true;
  // Test hook: replace the expected diagram for a target before the
  // isomorphism comparison, to prove the checks can fail.
  std::map<std::string, DynkinDiagram> expected_overrides;
};

// Runs every reproducible claim: catalog classification, enumeration counts
// and coverage, all 23 embeddings, the rank-2 family, the orthogonal-
// complement suite, and the oracle cross-checks. Check order is fixed.
Report verify_paper(const VerifyOptions& opt = {});

// Timings are excluded unless requested so reports stay byte identical.
std::string render_text(const Report& r, bool timings = false);
std::string render_json(const Report& r, bool timings = false);

}  // namespace kmroot
