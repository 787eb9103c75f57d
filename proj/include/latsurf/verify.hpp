#pragma once

#include <string>
#include <vector>

#include "latsurf/config.hpp"

namespace latsurf::verify {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

// Runs acceptance criterion `id` (1..13) at its pinned tolerance.
CriterionResult run_criterion(int id, const RunConfig& cfg);

std::vector<CriterionResult> run_all(const RunConfig& cfg);

inline constexpr int kCriterionCount = 13;

}  // namespace latsurf::verify
