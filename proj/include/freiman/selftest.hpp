#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freiman/f2.hpp"

namespace freiman {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the invariant suite on seeded instances with dim <= 12, then the full
// pipeline on every corpus set.
std::vector<CheckResult> selftest(std::uint64_t seed, const std::vector<PointSet>& corpus = {});

}  // namespace freiman
