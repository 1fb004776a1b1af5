#pragma once

// The acceptance suite: one entry per criterion, run by `lagmat selftest`
// and by the dedicated acceptance test binary.

#include <cstdint>
#include <string>
#include <vector>

namespace lagmat {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // short failure description, empty when passed
  double seconds = 0.0;
};

std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 20240917;

}  // namespace lagmat
