#pragma once

#include <cstdint>

#include "outerstring/io.hpp"

namespace outerstring::tools {

struct SuiteConfig {
  std::uint64_t seed = 1;
  bool quick = false;
  int threads = 1;
  bool check_determinism = true;

  // Sizes of the sweeps; `quick` shrinks the counts.
  int random_instances = 200;
  int max_strings = 50;
  int max_bends = 3;
  int folk_max_m = 6;
  int witness_seeds = 25;
  int solver_graphs = 200;

  void apply_quick();
};

struct SuiteResult {
  Json report;  // "checks" holds one entry per criterion 1..9
  bool pass = false;
  std::string digest;
};

SuiteResult run_suite(SuiteConfig config);

}  // namespace outerstring::tools
