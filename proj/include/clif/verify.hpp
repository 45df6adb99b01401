#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace clif {

struct SuiteReport {
  std::string suite;
  long trials = 0;
  double max_residual = 0.0;
  bool pass = false;
};

const std::vector<std::string>& suite_names();
// throws InvalidInput for an unknown suite or negative trials; trials 0 means the
// exhaustive variant where one exists and a default count otherwise
SuiteReport run_suite(const std::string& name, long trials, std::uint64_t seed);

}  // namespace clif
