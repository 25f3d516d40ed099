#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "freiman/dense_set.hpp"
#include "freiman/f2.hpp"

namespace freiman::testing {

using Rng = std::mt19937_64;

// Each point of F_2^dim kept independently with probability num/den.
inline DenseSet bernoulli_set(Rng& rng, int dim, std::uint64_t num, std::uint64_t den) {
  DenseSet x(dim);
  for (Word v = 0; v < (Word{1} << dim); ++v)
    if (rng() % den < num) x.insert(v);
  return x;
}

// Nonempty set with density drawn per instance.
inline DenseSet random_nonempty(Rng& rng, int dim) {
  DenseSet x = bernoulli_set(rng, dim, 1 + rng() % 7, 8);
  if (x.empty()) x.insert(rng() & dim_mask(dim));
  return x;
}

inline DenseSet from_subset_mask(int dim, std::uint64_t mask) {
  DenseSet x(dim);
  for (Word v = 0; v < (Word{1} << dim); ++v)
    if ((mask >> v) & 1U) x.insert(v);
  return x;
}

inline DenseSet set_of(int dim, std::initializer_list<Word> pts) {
  std::vector<Word> v(pts);
  return DenseSet::from_members(dim, v);
}

}  // namespace freiman::testing
