#include "freiman/generators.hpp"

#include <random>
#include <unordered_set>

#include "freiman/errors.hpp"

namespace freiman {

namespace {

// Uniform in [0, bound] from raw 64-bit draws; fixed across standard libraries.
Word uniform_upto(std::mt19937_64& rng, Word bound) {
  if (bound == ~Word{0}) return rng();
  const Word span = bound + 1;
  const Word limit = ~Word{0} - (~Word{0} % span + 1) % span;
  for (;;) {
    const Word r = rng();
    if (r <= limit) return r % span;
  }
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

PointSet gen_extremal(int d, int k, int n) {
  if (d < 0 || k < 1) throw InvalidArgument("extremal family needs d >= 0 and k >= 1");
  if (n > kMaxAmbientDim || n < d + k - 1)
    throw InvalidArgument("extremal family needs d + k - 1 <= n <= 64 (d=" + std::to_string(d) +
                          ", k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  if (d > 26) throw InstanceTooLarge("extremal subgroup too large to list");
  std::vector<Word> pts;
  pts.reserve((std::size_t{1} << d) + k - 1);
  for (Word h = 0; h < (Word{1} << d); ++h) pts.push_back(h);
  for (int i = 0; i < k - 1; ++i) pts.push_back(Word{1} << (d + i));
  return PointSet(n, std::move(pts));
}

PointSet gen_random(int n, std::uint64_t size, std::uint64_t seed) {
  if (n < 0 || n > kMaxAmbientDim) throw InvalidArgument("ambient dimension out of range");
  const Word top = dim_mask(n);  // largest point
  if (n < 64 && size > top + 1) throw InvalidArgument("cannot draw " + std::to_string(size) + " distinct points from F_2^" + std::to_string(n));
  if (size > (std::uint64_t{1} << 26)) throw InstanceTooLarge("random sample too large");
  // Floyd's sampling without replacement over [0, top].
  std::mt19937_64 rng(seed);
  std::unordered_set<Word> chosen;
  std::vector<Word> pts;
  pts.reserve(size);
  for (Word j = top - (size - 1); size > 0; ++j) {
    const Word t = uniform_upto(rng, j);
    const Word pick = chosen.count(t) ? j : t;
    chosen.insert(pick);
    pts.push_back(pick);
    if (j == top) break;
  }
  return PointSet(n, std::move(pts));
}

PointSet gen_subspace(int d, int n) {
  if (d < 0 || d > n || n > kMaxAmbientDim) throw InvalidArgument("subspace generator needs 0 <= d <= n <= 64");
  if (d > 26) throw InstanceTooLarge("subspace too large to list");
  std::vector<Word> pts(std::size_t{1} << d);
  for (Word h = 0; h < pts.size(); ++h) pts[h] = h;
  return PointSet(n, std::move(pts));
}

}  // namespace freiman
