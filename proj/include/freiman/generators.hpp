#pragma once

#include <cstdint>

#include "freiman/f2.hpp"

namespace freiman {

// H = span{e_1..e_d} together with k-1 independent coset representatives
// e_{d+1}..e_{d+k-1}; |A| = 2^d + k - 1.
PointSet gen_extremal(int d, int k, int n);

// `size` distinct uniform points of F_2^n, deterministic in the seed.
PointSet gen_random(int n, std::uint64_t size, std::uint64_t seed);

// span{e_1..e_d} inside F_2^n.
PointSet gen_subspace(int d, int n);

// SplitMix64 step; used to derive per-instance seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace freiman
