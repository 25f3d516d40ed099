#include "freiman/model.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <random>

#include "freiman/errors.hpp"

namespace freiman {

namespace {

int ceil_log2(std::uint64_t v) { return v <= 1 ? 0 : 64 - std::countl_zero(v - 1); }

// Map x -> coordinates of x in the basis of span (pivot gather), as a linear map.
LinearMap gather_map(const Subspace& span) {
  std::vector<Word> cols(span.ambient_dim());
  for (int i = 0; i < span.ambient_dim(); ++i) cols[i] = span.coordinates(Word{1} << i);
  return LinearMap(span.ambient_dim(), span.rank(), std::move(cols));
}

bool kernel_avoids(const LinearMap& map_on_span, const DenseSet& sums) {
  bool ok = true;
  sums.for_each([&](Word d) {
    if (ok && d != 0 && map_on_span.apply(d) == 0) ok = false;
  });
  return ok;
}

}  // namespace

bool is_freiman_iso_linear(const LinearMap& map, const PointSet& a, unsigned s, int dense_limit) {
  if (map.in_dim() != a.dim()) throw DimensionMismatch("map domain differs from the set's ambient dimension");
  if (s == 0) throw InvalidArgument("Freiman order must be at least 1");
  const Compressed c = compress(a, dense_limit);
  const DenseSet sums = iterated_sumset(c.set, 2 * s);
  // 2sA = 2s(A - a0) lies in the span; compose to act on span coordinates.
  const LinearMap on_span = map.compose(c.embedding.linear());
  return kernel_avoids(on_span, sums);
}

bool freiman_tuple_spot_check(const LinearMap& map, const PointSet& a, unsigned s, std::size_t samples,
                              std::uint64_t seed) {
  if (map.in_dim() != a.dim()) throw DimensionMismatch("map domain differs from the set's ambient dimension");
  if (a.empty()) throw InvalidArgument("spot check on an empty set");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
  const auto pts = a.words();
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<Word> lhs(s), rhs(s);
    for (auto& x : lhs) x = pts[pick(rng)];
    if (i % 2 == 0) {
      for (auto& x : rhs) x = pts[pick(rng)];
    } else {
      // A rearrangement with one pair swapped for a cancelling pair keeps the sum.
      if (s >= 2) lhs[1] = lhs[0];
      rhs = lhs;
      if (s >= 2) rhs[0] = rhs[1] = pts[pick(rng)];
      std::shuffle(rhs.begin(), rhs.end(), rng);
    }
    Word sa = 0, sb = 0;
    for (Word x : lhs) sa ^= x;
    for (Word x : rhs) sb ^= x;
    if ((sa == sb) != (map.apply(sa) == map.apply(sb))) return false;
  }
  return true;
}

Model find_model(const PointSet& a, unsigned s, std::uint64_t seed, int dense_limit) {
  if (a.empty()) throw InvalidArgument("cannot model an empty set");
  if (s == 0) throw InvalidArgument("Freiman order must be at least 1");
  const Compressed c = compress(a, dense_limit);
  const DenseSet sums = iterated_sumset(c.set, 2 * s);
  const int rank = c.span.rank();
  const LinearMap gather = gather_map(c.span);

  const int initial = ceil_log2(sums.size()) + 1;
  int m = initial;
  int retries = 0;
  std::optional<LinearMap> accepted;
  std::mt19937_64 rng(seed);
  while (m < rank && !accepted) {
    std::uniform_int_distribution<Word> draw(0, dim_mask(m));
    for (int attempt = 0; attempt < kModelRetryCap; ++attempt) {
      std::vector<Word> cols(rank);
      LinearMap candidate(rank, m, cols);
      do {  // condition on surjectivity
        for (auto& col : cols) col = draw(rng);
        candidate = LinearMap(rank, m, cols);
      } while (candidate.rank() != m);
      if (kernel_avoids(candidate, sums)) {
        accepted = candidate.compose(gather);
        break;
      }
      ++retries;
    }
    if (!accepted) ++m;
  }

  const bool identity = !accepted.has_value();
  LinearMap map = identity ? gather : *accepted;
  const int model_dim = map.out_dim();

  Model model{a.dim(), model_dim, map, a, DenseSet(model_dim)};
  model.s = s;
  model.span_rank = rank;
  model.sumset_size = sums.size();
  model.initial_model_dim = initial;
  model.retries = retries;
  model.identity_on_span = identity;
  for (Word x : a.words()) model.a_model.insert(map.apply(x));

  model.certificate = is_freiman_iso_linear(map, a, s, dense_limit);
  FREIMAN_ENSURE(model.certificate, "model map kernel meets 2sA");
  FREIMAN_ENSURE(model.a_model.size() == a.size(), "model map is not injective on A");
  if (model_dim <= initial)
    FREIMAN_ENSURE((BigInt(1) << model_dim) <= 4 * BigInt(model.sumset_size), "model space larger than 4|2sA|");
  return model;
}

Coset pullback_coset(const Model& model, const Subspace& w, int dense_limit) {
  if (w.ambient_dim() != model.model_dim) throw DimensionMismatch("subspace is not in model space");
  const DenseSet four_model = iterated_sumset(model.a_model, 4);
  const auto w_elems = w.elements();
  for (Word x : w_elems)
    if (!four_model.contains(x)) throw InvalidArgument("W is not contained in 4A of the model");

  const Compressed c = compress(model.a_source, dense_limit);
  const DenseSet four = iterated_sumset(c.set, 4);
  std::vector<Word> pulled;
  four.for_each([&](Word f) {
    const Word x = c.embedding.linear().apply(f);
    if (w.contains(model.map.apply(x))) pulled.push_back(x);
  });
  // The map is injective on 4A since ker ∩ 8A ⊆ ker ∩ 16A = {0}.
  FREIMAN_ENSURE(pulled.size() == w_elems.size(), "|P| differs from |W|");
  const PointSet p(model.source_dim, std::move(pulled));
  Coset coset = affine_span(p);
  FREIMAN_ENSURE(coset.rank() == w.rank(), "pullback of W is not a coset");
  return coset;
}

}  // namespace freiman
