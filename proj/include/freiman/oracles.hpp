#pragma once

// Brute-force reference implementations. They share only the container types
// with the library and none of its algorithms, and exist to check it.

#include <cstdint>
#include <vector>

#include "freiman/dense_set.hpp"
#include "freiman/f2.hpp"

namespace freiman::oracle {

// Rank by plain Gaussian elimination on a bit matrix (column pivots, low to high).
int rank(const std::vector<Word>& vectors, int ambient_dim);

// All pairwise XORs.
DenseSet pairwise_sumset(const DenseSet& x, const DenseSet& y);

// sX by s-1 rounds of pairwise sums.
DenseSet repeated_sumset(const DenseSet& x, unsigned s);

// T(γ) = Σ_x 1_A(x) (-1)^{γ·x}, term by term.
std::vector<std::int64_t> direct_spectrum(const DenseSet& a);

// Smallest coset containing A, by scanning every coset of every subspace of F_2^dim (dim <= 4).
std::uint64_t min_coset_size_exhaustive(const DenseSet& a);

// True iff some coset of size 2^r contains A (any r), by exhaustion (dim <= 4).
bool is_coset_exhaustive(const DenseSet& a);

// Tuple definition of a Freiman s-isomorphism for a linear map, over every
// pair of s-multisets of A (small A only).
bool freiman_iso_by_tuples(const LinearMap& map, const PointSet& a, unsigned s);

}  // namespace freiman::oracle
