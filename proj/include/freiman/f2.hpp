#pragma once

// Linear algebra over F_2 on points packed into one machine word.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace freiman {

using Word = std::uint64_t;

inline constexpr int kMaxAmbientDim = 64;

constexpr Word dim_mask(int dim) { return dim >= 64 ? ~Word{0} : (Word{1} << dim) - 1; }

constexpr int parity(Word x) { return __builtin_parityll(x); }

std::string to_hex(Word w);

// An element of F_2^dim; bits above dim are always zero.
class Point {
 public:
  Point(int dim, Word coords);

  int dim() const noexcept { return dim_; }
  Word coords() const noexcept { return coords_; }
  bool bit(int i) const noexcept { return (coords_ >> i) & 1U; }

  Point operator+(const Point& other) const;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  int dim_;
  Word coords_;
};

std::string to_string(const Point& p);

// A finite subset of F_2^dim, strictly sorted by coordinate value.
class PointSet {
 public:
  explicit PointSet(int dim) : dim_(check_dim(dim)) {}
  // Sorts; rejects duplicates and out-of-range points.
  PointSet(int dim, std::vector<Word> points);
  // Sorts and silently drops duplicates.
  static PointSet deduplicated(int dim, std::vector<Word> points);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  std::span<const Word> words() const noexcept { return points_; }
  Point operator[](std::size_t i) const { return Point(dim_, points_[i]); }
  bool contains(Word x) const;
  Word min() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  static int check_dim(int dim);
  int dim_;
  std::vector<Word> points_;
};

// Row-reduced echelon basis of a subspace of F_2^dim. The pivot of a row is its
// highest set bit; rows are ordered by increasing pivot and every pivot column
// is zero in all other rows. Coordinate k of a member corresponds to row k.
class Subspace {
 public:
  explicit Subspace(int ambient_dim);

  static Subspace span(int ambient_dim, std::span<const Word> vectors);
  static Subspace full(int ambient_dim);

  int ambient_dim() const noexcept { return dim_; }
  int rank() const noexcept { return static_cast<int>(rows_.size()); }
  int codim() const noexcept { return dim_ - rank(); }
  std::span<const Word> basis() const noexcept { return rows_; }
  Word pivot_mask() const noexcept { return pivots_; }
  int pivot(int row) const { return 63 - __builtin_clzll(rows_[row]); }

  // Canonical representative of x + V: all pivot bits cleared.
  Word reduce(Word x) const noexcept;
  bool contains(Word x) const noexcept { return reduce(x) == 0; }
  // Coordinates of a member in the row basis (gathered pivot bits). Linear on
  // the whole ambient space.
  Word coordinates(Word x) const noexcept;
  // The member with the given coordinates.
  Word element(Word coords) const noexcept;
  // All 2^rank members in coordinate order.
  std::vector<Word> elements() const;

  // Adds vectors; returns true if the rank grew.
  bool insert(Word v);
  Subspace join(const Subspace& other) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  int dim_;
  std::vector<Word> rows_;
  Word pivots_ = 0;
};

// rep + subspace, with rep canonical (zero at every pivot).
class Coset {
 public:
  Coset(Word rep, Subspace subspace);

  Word rep() const noexcept { return rep_; }
  const Subspace& subspace() const noexcept { return subspace_; }
  int ambient_dim() const noexcept { return subspace_.ambient_dim(); }
  int rank() const noexcept { return subspace_.rank(); }
  bool contains(Word x) const noexcept { return subspace_.reduce(x) == rep_; }
  bool contains(const Coset& other) const;
  std::vector<Word> elements() const;

  friend bool operator==(const Coset&, const Coset&) = default;

 private:
  Word rep_;
  Subspace subspace_;
};

// Linear map F_2^in -> F_2^out given by its columns.
class LinearMap {
 public:
  LinearMap(int in_dim, int out_dim, std::vector<Word> columns);
  static LinearMap identity(int dim);

  int in_dim() const noexcept { return in_dim_; }
  int out_dim() const noexcept { return out_dim_; }
  std::span<const Word> columns() const noexcept { return columns_; }
  Word apply(Word x) const noexcept {
    Word y = 0;
    while (x) {
      y ^= columns_[__builtin_ctzll(x)];
      x &= x - 1;
    }
    return y;
  }
  int rank() const;
  // this ∘ inner
  LinearMap compose(const LinearMap& inner) const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  int in_dim_;
  int out_dim_;
  std::vector<Word> columns_;
};

// Injective affine map x -> M x + offset.
class Embedding {
 public:
  Embedding(LinearMap linear, Word offset);
  static Embedding identity(int dim) { return Embedding(LinearMap::identity(dim), 0); }

  int in_dim() const noexcept { return linear_.in_dim(); }
  int out_dim() const noexcept { return linear_.out_dim(); }
  const LinearMap& linear() const noexcept { return linear_; }
  Word offset() const noexcept { return offset_; }
  Word apply(Word x) const noexcept { return linear_.apply(x) ^ offset_; }
  // this ∘ inner
  Embedding compose(const Embedding& inner) const;
  // Image of a subspace of the input space under the linear part.
  Subspace image(const Subspace& s) const;

  friend bool operator==(const Embedding&, const Embedding&) = default;

 private:
  LinearMap linear_;
  Word offset_;
};

Subspace rref_basis(int ambient_dim, std::span<const Word> vectors);
Subspace rref_basis(int ambient_dim, std::span<const Point> vectors);

// Minimal coset containing A: a0 + span{a + a0}, a0 the minimum point.
Coset affine_span(const PointSet& a);

}  // namespace freiman
