#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fflambda::cli {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::uint64_t checked = 0;
  std::string detail;
};

struct VerifyConfig {
  std::vector<std::uint64_t> fields;  // empty: per-suite default
  unsigned deg = 3;
  unsigned n_max = 3;
  std::uint64_t bound = 0;            // 0: per-suite default
  double tol_weil = 1e-9;
};

extern const std::vector<std::string> kSuiteNames;

// Throws InvalidArgument for an unknown suite.
SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg);

}  // namespace fflambda::cli
