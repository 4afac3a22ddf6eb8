#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/serialize.hpp"

namespace hecke::cli {

struct SuiteOptions {
  int lmax = 4;
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct CheckResult {
  std::string suite, tag, name;
  int cases = 0;
  bool pass = true;
  double seconds = 0;
  json counterexample;  // null when every case passes
};

const std::vector<std::string>& suite_names();

// suite is one of suite_names() or "all"
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opt);

}  // namespace hecke::cli
