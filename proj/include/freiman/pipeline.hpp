#pragma once

// End-to-end pipeline: model -> subspace inside 4A' -> pullback -> covering.

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "freiman/covering.hpp"
#include "freiman/dense_set.hpp"
#include "freiman/model.hpp"
#include "freiman/structure.hpp"

namespace freiman {

struct PipelineConfig {
  unsigned s = kDefaultModelOrder;
  std::uint64_t seed = 0;
  int dense_limit = kDefaultDenseLimit;
  bool timings = false;            // wall times make output nondeterministic
  std::ostream* log = nullptr;     // one JSON object per stage, if set
};

struct StageTimes {
  double model_ms = 0;
  double structure_ms = 0;
  double pullback_ms = 0;
  double cover_ms = 0;
};

struct PipelineReport {
  std::size_t set_size = 0;
  int ambient_dim = 0;
  int span_rank = 0;
  std::uint64_t sumset_size = 0;  // |A+A|
  Rational doubling;
  std::uint64_t min_coset_size = 0;

  Model model;
  StructureResult structure;
  Coset pullback;     // ambient coordinates, ⊆ 4A
  CoverReport cover;  // span coordinates
  Coset final_coset;  // ambient coordinates, ⊇ A
  Rational final_ratio{};
  bool contains_a = false;

  // Yardsticks. Exact where possible; fits are labeled as such.
  Rational model_density{};// |A| / 2^m
  Rational model_vs_k16{}; // 2^m / (K^16 |A|)
  bool density_at_least_k_minus16 = false;
  std::optional<double> fit_model_exponent{};  // c with 2^m = K^c |A|
  std::optional<double> fit_cover_const{};    // r / (K log2(K/η))
  std::optional<double> fit_final_const{};    // log2(|C|/|A|) / (K^{3/2} log2 K)

  StageTimes times{};
  bool certificates_ok = false;
};

PipelineReport run_pipeline(const PointSet& a, const PipelineConfig& config = {});

}  // namespace freiman
