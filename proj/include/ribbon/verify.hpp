#pragma once

// Cross-validation suites: oracle equivalence, lemma properties,
// matrix structure and generating functions.

#include <string>
#include <vector>

namespace ribbon {

struct VerifyResult {
  std::string name;
  bool ok = false;
  std::string detail;  // counterexample echo on failure
};

struct VerifyReport {
  std::vector<VerifyResult> results;
  bool all_ok() const;
};

// suite in {oracle, lemmas, matrix, genfun, all}.
VerifyReport verify(const std::string& suite);

}  // namespace ribbon
