#pragma once

// Density-increment iterations that extract a large subspace inside 4A.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "freiman/dense_set.hpp"
#include "freiman/f2.hpp"
#include "freiman/rational.hpp"

namespace freiman {

struct StepRecord {
  int step = 0;       // k: the step that produced the sets of stage k+1
  int local_dim = 0;  // dimension of the stage-k space
  Word gamma = 0;     // chosen character, stage-k coordinates
  std::int64_t coefficient = 0;
  int side_a = 0;
  std::optional<int> side_b;
  Rational alpha_before, alpha_after;
  std::optional<Rational> beta_before, beta_after;
  // Stage-(k+1) coordinates -> model space along A's line; offset is x_{k+1}.
  Embedding embedding;
  Word x = 0;
  Word y = 0;  // B's accumulated translate (equals x in the pure iteration)
};

struct StructureResult {
  Subspace w;  // model-space coordinates
  int codim = 0;
  std::vector<StepRecord> trace{};
  std::int64_t bound_budget = 0;
  Rational alpha{};
  Rational doubling{};  // K fixed at entry (1 for the pure iteration)
  // For the doubling iteration: the pure iteration run on B at the terminal
  // stage, in that stage's coordinates.
  std::vector<StepRecord> terminal_trace{};
};

struct Full {};

struct Increment {
  Word gamma;
  std::int64_t coefficient;
  int side;
  Restriction restricted;
};

using PureStep = std::variant<Full, Increment>;

// One step of the pure density iteration on A ⊆ F_2^dim.
PureStep pure_increment_step(const DenseSet& a);

// ⌈7 α^{-1/2}⌉ + 1
std::int64_t pure_density_budget(const Rational& alpha);
// ⌈2^{3/2} K^{1/2} log2(1/α)⌉ + ⌈7 (2K)^{1/2}⌉ + 2
std::int64_t doubling_budget(const Rational& doubling, const Rational& alpha);

StructureResult pure_density_subspace(const DenseSet& a);

struct Terminal {
  StructureResult inner;  // pure iteration on B, in B's coordinates
};

struct PairIncrement {
  Word gamma;
  std::int64_t coefficient;
  int side_a;
  int side_b;
  Restriction a;
  Restriction b;
};

using PairStep = std::variant<Terminal, PairIncrement>;

// One step of the paired iteration, under |A+B| <= K|B|.
PairStep pair_increment_step(const DenseSet& a, const DenseSet& b, const Rational& doubling);

StructureResult doubling_subspace(const DenseSet& a);

}  // namespace freiman
