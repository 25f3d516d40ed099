#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freiman/dense_set.hpp"
#include "freiman/model.hpp"

namespace freiman {

// Inclusive integer range "lo:hi" (or a single value). lo > hi is empty.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool empty() const noexcept { return lo > hi; }
  static IntRange parse(const std::string& text);
};

struct SweepSpec {
  std::string family = "extremal";  // extremal | random | subspace
  IntRange d{0, 0};
  IntRange k{1, 1};
  IntRange n{0, -1};     // empty: smallest ambient dimension that fits
  IntRange size{0, -1};  // random family only
  unsigned count = 1;    // random instances per (n, size)
  std::uint64_t seed = 0;
  int dense_limit = kDefaultDenseLimit;
  unsigned s = kDefaultModelOrder;
  bool timings = false;
  unsigned jobs = 1;
};

struct SweepResult {
  std::string csv;
  std::size_t rows = 0;
  std::size_t defects = 0;  // certificate violations
  std::size_t errors = 0;   // other failures (e.g. instance too large)
};

std::vector<std::string> sweep_columns(bool timings);
SweepResult run_sweep(const SweepSpec& spec);

}  // namespace freiman
