#pragma once

#include <cstddef>
#include <vector>

#include "freiman/dense_set.hpp"
#include "freiman/f2.hpp"
#include "freiman/rational.hpp"

namespace freiman {

struct CoverReport {
  Coset input;   // Q ⊆ 4A
  Rational eta;  // |Q| / |A|
  Coset output;  // C ⊇ A
  int overhead = 0;  // dim C - dim Q
  std::vector<std::size_t> round_sizes{};  // |X_i| per round
  Rational final_ratio{};                 // |C| / |A|
};

// Greedy maximal X ⊆ S, scanned in increasing order, whose translates ξ + B are
// pairwise disjoint. Then S ⊆ X + B + B and |X| <= |S + B| / |B|.
PointSet ruzsa_cover(const DenseSet& s, const DenseSet& b);

// Grows Q's subspace by the differences of a Ruzsa cover of A by Q-cosets until
// A sits in a single coset.
CoverReport chang_cover(const DenseSet& a, const Coset& q);

// Smallest coset containing A.
Coset minimal_coset_oracle(const PointSet& a);

}  // namespace freiman
