#pragma once

// The acceptance grid, shared by `affyh selftest` and the acceptance test.

#include <cstdint>
#include <string>
#include <vector>

#include "affyh/json_io.hpp"

namespace affyh {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = true;
  long checks = 0;
  /// First failure, or a short summary when everything passed.
  std::string detail;
};

/// Criteria 1-8; criterion 9 (byte-identical reruns) needs two runs and is
/// checked by the caller.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

Json to_json(const std::vector<CriterionResult>& results, std::uint64_t seed);

}  // namespace affyh
