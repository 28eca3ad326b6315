#pragma once

#include <string>
#include <vector>

#include "oyang/check.hpp"
#include "oyang/rat.hpp"

namespace oyang {

/// One run's configuration. Rationals arrive as exact "p/q" strings from the
/// CLI or config file; floats are never ingested.
struct RunConfig {
  std::string suite = "all";
  int n = 2;
  int rmax = 3;
  int smax = 3;
  int N = 8;             // truncation order
  Rat alpha = Rat(0);    // Dickson
  Rat beta = Rat(1);     // Dickson
  Rat q = Rat(2);        // Pochhammer
  Rat c = Rat(1);        // phi shift
  Rat d = Rat(2);        // second phi shift
  Rat nonorth_a = Rat(2);
  Rat ternary_a = Rat(1);  // nomenclature parameter a
  Rat ternary_b = Rat(1);  // nomenclature parameter b
  std::string algebra = "sl2";
  std::string family = "hermite";
  int samples = 5;
  int test_degree = 4;
  std::uint64_t seed = 0;
  int jobs = 0;  // 0 = OYANG_JOBS or 1
  bool negative_controls = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckRecord> records;
};

const std::vector<std::string>& suite_names();  // excludes "all"

/// Executes the configured suite ("all" fans out to every suite).
/// Deterministic for a fixed config: sampling is driven only by the seed and
/// results are merged in task order.
std::vector<SuiteResult> run_suite(const RunConfig& config);

}  // namespace oyang
