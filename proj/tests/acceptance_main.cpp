// Acceptance suite runner: one pass/fail line per criterion, non-zero exit
// when anything fails.  Accepts an optional seed argument.

#include <cstdio>
#include <cstdlib>

#include "lagmat/selftest.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed =
      argc > 1 ? std::strtoull(argv[1], nullptr, 10) : lagmat::kDefaultSeed;
  int failures = 0;
  for (const auto& r : lagmat::run_acceptance(seed)) {
    std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", r.id,
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.empty() ? "" : " -- ", r.detail.c_str());
    failures += r.passed ? 0 : 1;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
