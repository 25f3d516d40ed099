#include "freiman/oracles.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "freiman/errors.hpp"

namespace freiman::oracle {

int rank(const std::vector<Word>& vectors, int ambient_dim) {
  std::vector<std::vector<int>> rows;
  for (Word v : vectors) {
    std::vector<int> row(ambient_dim);
    for (int c = 0; c < ambient_dim; ++c) row[c] = (v >> c) & 1U;
    rows.push_back(row);
  }
  int r = 0;
  for (int c = 0; c < ambient_dim && r < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c]) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      if (i != r && rows[i][c])
        for (int j = 0; j < ambient_dim; ++j) rows[i][j] ^= rows[r][j];
    ++r;
  }
  return r;
}

DenseSet pairwise_sumset(const DenseSet& x, const DenseSet& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("oracle sumset dims");
  DenseSet out(x.dim());
  const auto xs = x.members();
  const auto ys = y.members();
  for (Word a : xs)
    for (Word b : ys) out.insert(a ^ b);
  return out;
}

DenseSet repeated_sumset(const DenseSet& x, unsigned s) {
  DenseSet out = x;
  for (unsigned i = 1; i < s; ++i) out = pairwise_sumset(out, x);
  return out;
}

std::vector<std::int64_t> direct_spectrum(const DenseSet& a) {
  const std::uint64_t n = a.universe_size();
  const auto members = a.members();
  std::vector<std::int64_t> t(n, 0);
  for (Word g = 0; g < n; ++g)
    for (Word x : members) t[g] += (std::popcount(g & x) % 2 == 0) ? 1 : -1;
  return t;
}

namespace {

// Every subspace of F_2^dim as a bitmask over its 2^dim points.
std::vector<std::uint64_t> build_subspace_masks(int dim) {
  const int n = 1 << dim;
  std::set<std::uint64_t> masks;
  // A subspace is the closure of any subset of points.
  for (std::uint64_t gen = 0; gen < (std::uint64_t{1} << n); ++gen) {
    std::uint64_t mask = 1;  // {0}
    bool grew = true;
    for (int p = 0; p < n; ++p)
      if (gen >> p & 1U) mask |= std::uint64_t{1} << p;
    while (grew) {
      grew = false;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          if ((mask >> p & 1U) && (mask >> q & 1U) && !(mask >> (p ^ q) & 1U)) {
            mask |= std::uint64_t{1} << (p ^ q);
            grew = true;
          }
    }
    masks.insert(mask);
  }
  return {masks.begin(), masks.end()};
}

const std::vector<std::uint64_t>& all_subspace_masks(int dim) {
  if (dim < 0 || dim > 4) throw InstanceTooLarge("exhaustive coset scan limited to dim <= 4");
  static const std::vector<std::uint64_t> cache[5] = {build_subspace_masks(0), build_subspace_masks(1),
                                                      build_subspace_masks(2), build_subspace_masks(3),
                                                      build_subspace_masks(4)};
  return cache[dim];
}

std::uint64_t shift_mask(std::uint64_t mask, int dim, int t) {
  std::uint64_t out = 0;
  for (int p = 0; p < (1 << dim); ++p)
    if (mask >> p & 1U) out |= std::uint64_t{1} << (p ^ t);
  return out;
}

std::uint64_t set_mask(const DenseSet& a) {
  std::uint64_t m = 0;
  a.for_each([&](Word p) { m |= std::uint64_t{1} << p; });
  return m;
}

}  // namespace

std::uint64_t min_coset_size_exhaustive(const DenseSet& a) {
  const std::uint64_t target = set_mask(a);
  std::uint64_t best = ~std::uint64_t{0};
  for (std::uint64_t sub : all_subspace_masks(a.dim()))
    for (int t = 0; t < (1 << a.dim()); ++t) {
      const std::uint64_t coset = shift_mask(sub, a.dim(), t);
      if ((coset & target) == target) best = std::min<std::uint64_t>(best, std::popcount(coset));
    }
  return best;
}

bool is_coset_exhaustive(const DenseSet& a) {
  const std::uint64_t target = set_mask(a);
  for (std::uint64_t sub : all_subspace_masks(a.dim()))
    for (int t = 0; t < (1 << a.dim()); ++t)
      if (shift_mask(sub, a.dim(), t) == target) return true;
  return false;
}

bool freiman_iso_by_tuples(const LinearMap& map, const PointSet& a, unsigned s) {
  // Enumerate sums of s-multisets together with their images.
  std::set<std::pair<Word, Word>> sums;  // (sum, image of sum)
  const auto pts = a.words();
  std::vector<std::size_t> idx(s, 0);
  for (;;) {
    Word sum = 0, img = 0;
    for (std::size_t i : idx) {
      sum ^= pts[i];
      img ^= map.apply(pts[i]);
    }
    sums.insert({sum, img});
    std::size_t pos = 0;
    while (pos < s && ++idx[pos] == pts.size()) idx[pos++] = 0;
    if (pos == s) break;
  }
  // A homomorphism sends equal sums to equal images; an isomorphism also
  // separates distinct sums.
  std::set<Word> sum_values, image_values;
  for (const auto& [sum, img] : sums) {
    sum_values.insert(sum);
    image_values.insert(img);
  }
  return sums.size() == sum_values.size() && sum_values.size() == image_values.size();
}

}  // namespace freiman::oracle
