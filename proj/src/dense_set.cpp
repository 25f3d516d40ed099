#include "freiman/dense_set.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "freiman/detail/fwht_kernel.hpp"
#include "freiman/errors.hpp"

namespace freiman {

namespace {

std::size_t word_count(int dim) { return dim >= 6 ? std::size_t{1} << (dim - 6) : 1; }

void require_same_dim(const DenseSet& x, const DenseSet& y) {
  if (x.dim() != y.dim())
    throw DimensionMismatch("dense sets of dimension " + std::to_string(x.dim()) + " and " + std::to_string(y.dim()));
}

constexpr Word kSwapMasks[6] = {0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
                                0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL};

// Index permutation b -> b ^ lo inside one word, as butterfly swaps of 2^i-bit blocks.
inline Word permute_in_word(Word x, unsigned lo) {
  for (unsigned i = 0; i < 6; ++i) {
    if (lo >> i & 1U) {
      const unsigned s = 1U << i;
      x = ((x & kSwapMasks[i]) << s) | ((x >> s) & kSwapMasks[i]);
    }
  }
  return x;
}

template <class T>
DenseSet sumset_fwht_as(const DenseSet& x, const DenseSet& y) {
  const std::size_t n = x.universe_size();
  std::vector<T> fx(n, T{0});
  std::vector<T> fy(n, T{0});
  x.for_each([&](Word p) { fx[p] = 1; });
  y.for_each([&](Word p) { fy[p] = 1; });
  detail::fwht_unchecked<T>(fx);
  detail::fwht_unchecked<T>(fy);
  for (std::size_t i = 0; i < n; ++i) fx[i] *= fy[i];
  detail::fwht_unchecked<T>(fx);
  DenseSet out(x.dim());
  for (std::size_t i = 0; i < n; ++i)
    if (fx[i] > 0) out.insert(i);
  return out;
}

}  // namespace

DenseSet::DenseSet(int dim) : dim_(dim) {
  if (dim < 0 || dim > kDenseHardCap) throw InstanceTooLarge("dense dimension " + std::to_string(dim) + " exceeds hard cap");
  words_.assign(word_count(dim), 0);
}

DenseSet DenseSet::full(int dim) {
  DenseSet s(dim);
  std::fill(s.words_.begin(), s.words_.end(), s.word_mask());
  return s;
}

DenseSet DenseSet::from_members(int dim, std::span<const Word> members) {
  DenseSet s(dim);
  for (Word x : members) {
    if (!s.in_range(x)) throw InvalidArgument("member " + to_hex(x) + " outside F_2^" + std::to_string(dim));
    s.insert(x);
  }
  return s;
}

Word DenseSet::word_mask() const noexcept {
  return dim_ >= 6 ? ~Word{0} : (Word{1} << (std::size_t{1} << dim_)) - 1;
}

std::size_t DenseSet::size() const noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool DenseSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::vector<Word> DenseSet::members() const {
  std::vector<Word> out;
  out.reserve(size());
  for_each([&](Word x) { out.push_back(x); });
  return out;
}

DenseSet& DenseSet::operator|=(const DenseSet& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

DenseSet& DenseSet::operator&=(const DenseSet& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool DenseSet::is_subset_of(const DenseSet& other) const {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool DenseSet::intersects(const DenseSet& other) const {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

DenseSet translate(const DenseSet& x, Word a) {
  if (!x.in_range(a)) throw DimensionMismatch("translate by " + to_hex(a) + " outside F_2^" + std::to_string(x.dim()));
  DenseSet out(x.dim());
  const auto src = x.words();
  auto dst = out.words();
  const std::size_t hi = a >> 6;
  const unsigned lo = static_cast<unsigned>(a & 63);
  for (std::size_t w = 0; w < src.size(); ++w) dst[w ^ hi] = permute_in_word(src[w], lo);
  return out;
}

DenseSet sumset_translate_union(const DenseSet& x, const DenseSet& y) {
  require_same_dim(x, y);
  const DenseSet& small = x.size() <= y.size() ? x : y;
  const DenseSet& large = &small == &x ? y : x;
  DenseSet out(x.dim());
  const auto src = large.words();
  auto dst = out.words();
  const Word full_mask = out.word_mask();
  bool done = false;
  small.for_each([&](Word a) {
    if (done) return;
    const std::size_t hi = a >> 6;
    const unsigned lo = static_cast<unsigned>(a & 63);
    Word all = full_mask;
    for (std::size_t w = 0; w < src.size(); ++w) {
      Word& d = dst[w ^ hi];
      d |= permute_in_word(src[w], lo);
      all &= d;
    }
    done = all == full_mask;
  });
  return out;
}

DenseSet sumset_fwht(const DenseSet& x, const DenseSet& y) {
  require_same_dim(x, y);
  // Forward coefficients are bounded by 2^m, products by 2^{2m}, and the
  // inverse-transform partial sums by 2^{3m}.
  if (3 * x.dim() <= 62) return sumset_fwht_as<std::int64_t>(x, y);
  return sumset_fwht_as<__int128>(x, y);
}

DenseSet sumset(const DenseSet& x, const DenseSet& y) {
  require_same_dim(x, y);
  const std::size_t nx = x.size();
  const std::size_t ny = y.size();
  if (nx == 0 || ny == 0) return DenseSet(x.dim());
  // Pigeonhole: X and z+Y meet for every z.
  if (nx + ny > x.universe_size()) return DenseSet::full(x.dim());
  const std::size_t small = std::min(nx, ny);
  if (small <= 32 * static_cast<std::size_t>(std::max(1, x.dim()))) return sumset_translate_union(x, y);
  return sumset_fwht(x, y);
}

DenseSet iterated_sumset(const DenseSet& x, unsigned s) {
  if (s == 0) throw InvalidArgument("iterated sumset needs s >= 1");
  if (x.empty()) throw InvalidArgument("iterated sumset of an empty set");
  DenseSet power = x;
  bool have = false;
  DenseSet result(x.dim());
  while (s) {
    if (s & 1U) {
      result = have ? sumset(result, power) : power;
      have = true;
    }
    s >>= 1;
    if (s) power = sumset(power, power);
  }
  return result;
}

Rational doubling_constant(const DenseSet& a) {
  if (a.empty()) throw InvalidArgument("doubling constant of an empty set");
  return Rational(BigInt(sumset(a, a).size()), BigInt(a.size()));
}

Rational doubling_constant(const PointSet& a, int dense_limit) {
  if (a.empty()) throw InvalidArgument("doubling constant of an empty set");
  return doubling_constant(compress(a, dense_limit).set);
}

bool is_subspace(const DenseSet& x) {
  if (!x.contains(0)) return false;
  const std::size_t n = x.size();
  if (!std::has_single_bit(n)) return false;
  const int log_size = std::countr_zero(n);
  Subspace span(x.dim());
  bool ok = true;
  x.for_each([&](Word p) {
    if (ok && span.insert(p) && span.rank() > log_size) ok = false;
  });
  return ok && span.rank() == log_size;
}

Restriction hyperplane_restrict(const DenseSet& x, Word gamma, int side) {
  const int m = x.dim();
  if (gamma == 0) throw InvalidArgument("hyperplane restriction needs a nonzero character");
  if (!x.in_range(gamma)) throw DimensionMismatch("character " + to_hex(gamma) + " outside F_2^" + std::to_string(m));
  if (side != 0 && side != 1) throw InvalidArgument("side must be 0 or 1");
  const int j = __builtin_ctzll(gamma);
  const Word low = (Word{1} << j) - 1;

  std::vector<Word> cols(m - 1);
  for (int k = 0; k < m - 1; ++k) {
    const int i = k < j ? k : k + 1;
    cols[k] = (Word{1} << i) | (((gamma >> i) & 1U) << j);
  }
  Embedding emb(LinearMap(m - 1, m, std::move(cols)), side ? Word{1} << j : 0);

  DenseSet out(m - 1);
  const std::uint64_t n = out.universe_size();
  for (Word y = 0; y < n; ++y) {
    const Word base = ((y & ~low) << 1) | (y & low);
    const Word p = base | (static_cast<Word>(parity(base & gamma) ^ side) << j);
    if (x.contains(p)) out.insert(y);
  }
  return {std::move(out), std::move(emb)};
}

Compressed compress(const PointSet& a, int dense_limit) {
  if (a.empty()) throw InvalidArgument("cannot compress an empty set");
  const Word a0 = a.min();
  Subspace span(a.dim());
  for (Word x : a.words()) span.insert(x ^ a0);
  if (span.rank() > dense_limit || span.rank() > kDenseHardCap)
    throw InstanceTooLarge("affine span has dimension " + std::to_string(span.rank()) + " above dense limit " +
                           std::to_string(dense_limit));
  DenseSet set(span.rank());
  for (Word x : a.words()) set.insert(span.coordinates(x ^ a0));
  std::vector<Word> cols(span.basis().begin(), span.basis().end());
  Embedding emb(LinearMap(span.rank(), a.dim(), std::move(cols)), a0);
  return {std::move(set), std::move(emb), std::move(span)};
}

PointSet decompress(const DenseSet& x, const Embedding& embedding) {
  if (x.dim() != embedding.in_dim()) throw DimensionMismatch("embedding domain differs from set dimension");
  std::vector<Word> pts;
  pts.reserve(x.size());
  x.for_each([&](Word p) { pts.push_back(embedding.apply(p)); });
  return PointSet(embedding.out_dim(), std::move(pts));
}

}  // namespace freiman
