#pragma once

// Invariant suites shared by `canon verify` and the test programs.

#include <cstdint>
#include <string>
#include <vector>

#include "canon/constants.hpp"

namespace canon {

struct VerifyConfig {
  std::uint64_t seed = 42;
  int algebra_degree_cap = 6;
  int casimir_degree_cap = 8;
  int casimir_smoke_degree_cap = 10;
  PhysicalConstants constants;
};

struct InvariantResult {
  std::string suite;
  std::string name;
  long samples = 0;
  double max_residual = 0.0;
  /// 0 for exact checks (residual counts failures).
  double tolerance = 0.0;
  bool passed = false;
  double seconds = 0.0;
};

const std::vector<std::string>& suite_names();  // without "all"
/// Runs one suite, or every suite for "all"; throws on an unknown name.
std::vector<InvariantResult> run_suite(const std::string& name, const VerifyConfig& config = {});

}  // namespace canon
