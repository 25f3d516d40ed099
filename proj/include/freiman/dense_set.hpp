#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "freiman/f2.hpp"
#include "freiman/rational.hpp"

namespace freiman {

inline constexpr int kDefaultDenseLimit = 22;
// Largest dimension a DenseSet will ever allocate, whatever the configured limit.
inline constexpr int kDenseHardCap = 30;

// A subset of F_2^dim stored as its 2^dim-bit characteristic vector. Bit x of
// the vector marks the point whose coordinate word is x.
class DenseSet {
 public:
  explicit DenseSet(int dim);
  static DenseSet full(int dim);
  static DenseSet from_members(int dim, std::span<const Word> members);

  int dim() const noexcept { return dim_; }
  std::uint64_t universe_size() const noexcept { return std::uint64_t{1} << dim_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return size() == universe_size(); }
  Rational density() const { return Rational(BigInt(size()), BigInt(universe_size())); }

  bool contains(Word x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void insert(Word x) noexcept { words_[x >> 6] |= Word{1} << (x & 63); }
  void erase(Word x) noexcept { words_[x >> 6] &= ~(Word{1} << (x & 63)); }
  bool in_range(Word x) const noexcept { return (x & ~dim_mask(dim_)) == 0; }

  // Members in increasing order.
  std::vector<Word> members() const;
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        f((static_cast<Word>(w) << 6) | static_cast<Word>(__builtin_ctzll(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }
  // Mask of the valid bits in each word (only below 64 when dim < 6).
  Word word_mask() const noexcept;

  DenseSet& operator|=(const DenseSet& other);
  DenseSet& operator&=(const DenseSet& other);
  bool is_subset_of(const DenseSet& other) const;
  bool intersects(const DenseSet& other) const;

  friend bool operator==(const DenseSet&, const DenseSet&) = default;

 private:
  int dim_;
  std::vector<Word> words_;
};

// x -> x ^ a applied to every member.
DenseSet translate(const DenseSet& x, Word a);

// X + Y as the union of |smaller| translates of the larger set.
DenseSet sumset_translate_union(const DenseSet& x, const DenseSet& y);
// X + Y as the support of the XOR convolution, via integer Walsh–Hadamard transforms.
DenseSet sumset_fwht(const DenseSet& x, const DenseSet& y);
// Picks a route by size; same result as both of the above.
DenseSet sumset(const DenseSet& x, const DenseSet& y);

// sX: sums of exactly s members (repetition allowed), s >= 1.
DenseSet iterated_sumset(const DenseSet& x, unsigned s);

// |A+A| / |A|
Rational doubling_constant(const DenseSet& a);
Rational doubling_constant(const PointSet& a, int dense_limit = kDefaultDenseLimit);

bool is_subspace(const DenseSet& x);

struct Restriction {
  DenseSet set;
  Embedding embedding;  // local coordinates -> the parent space
};

// X ∩ {x : γ·x = side}, re-coordinatized into F_2^{dim-1} with the basis
// {e_i + γ_i e_j : i != j} of γ^⊥, j the lowest set bit of γ. Side 1 carries
// offset e_j.
Restriction hyperplane_restrict(const DenseSet& x, Word gamma, int side);

struct Compressed {
  DenseSet set;         // A - a0 in span coordinates
  Embedding embedding;  // span coordinates -> ambient, offset a0
  Subspace span;        // span{a + a0}
};

// Re-coordinatizes A inside its affine span; a0 = min(A).
Compressed compress(const PointSet& a, int dense_limit = kDefaultDenseLimit);
PointSet decompress(const DenseSet& x, const Embedding& embedding);

}  // namespace freiman
