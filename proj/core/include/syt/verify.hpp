#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "syt/numbers.hpp"

namespace syt {

enum class Verdict { pass, fail, report_only };

inline const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    default: return "REPORT_ONLY";
  }
}

struct SuiteParams {
  int n_max = -1;          // -1 picks the suite default
  int d_max = -1;
  Rat eps = Rat(0);        // 0 picks the suite default
  std::uint64_t seed = 1;
  long trials = -1;
  int threads = 1;
};

struct SuiteReport {
  std::string suite;
  long instances = 0;
  std::vector<std::pair<std::string, std::string>> violations;  // (shape, detail)
  std::vector<std::pair<std::string, std::string>> extrema;     // summary statistics
  std::vector<std::string> notes;                               // params echo, frozen caps
  Verdict verdict = Verdict::pass;
};

// Named verification suites replaying the theorems, lemmas, and
// conjecture scans over generated shape corpora. Assertive suites evaluate
// every predicate in exact arithmetic and FAIL on any violation;
// REPORT_ONLY suites only publish extrema.
std::vector<std::string> registered_suites();
SuiteReport run_suite(const std::string& name, const SuiteParams& params = {});

}  // namespace syt
