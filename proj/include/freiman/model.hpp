#pragma once

// Dense Freiman-isomorphic models of a set via random linear maps, and the
// pullback of a model subspace to a coset of the source.

#include <cstdint>

#include "freiman/dense_set.hpp"
#include "freiman/f2.hpp"

namespace freiman {

inline constexpr unsigned kDefaultModelOrder = 8;
inline constexpr int kModelRetryCap = 64;

struct Model {
  int source_dim = 0;
  int model_dim = 0;
  LinearMap map;  // F_2^source_dim -> F_2^model_dim, linear and surjective on span(A - a0)
  PointSet a_source;
  DenseSet a_model;
  unsigned s = kDefaultModelOrder;
  int span_rank = 0;
  std::uint64_t sumset_size = 0;  // |2sA|
  int initial_model_dim = 0;      // ⌈log2 |2sA|⌉ + 1
  int retries = 0;                // rejected candidates
  bool identity_on_span = false;
  bool certificate = false;       // ker(map) ∩ 2sA = {0}, verified
};

// True iff the linear map is a Freiman s-isomorphism on A, i.e. its kernel
// meets 2sA only in 0.
bool is_freiman_iso_linear(const LinearMap& map, const PointSet& a, unsigned s,
                           int dense_limit = kDefaultDenseLimit);

// Checks the tuple definition directly on random pairs of s-tuples:
// a_1+..+a_s = b_1+..+b_s  <=>  φ(a_1)+..+φ(a_s) = φ(b_1)+..+φ(b_s).
bool freiman_tuple_spot_check(const LinearMap& map, const PointSet& a, unsigned s, std::size_t samples,
                              std::uint64_t seed);

Model find_model(const PointSet& a, unsigned s = kDefaultModelOrder, std::uint64_t seed = 0,
                 int dense_limit = kDefaultDenseLimit);

// {x ∈ 4A_source : map(x) ∈ W}, certified to be a coset with |P| = |W|.
Coset pullback_coset(const Model& model, const Subspace& w, int dense_limit = kDefaultDenseLimit);

}  // namespace freiman
