#include "freiman/f2.hpp"

#include <algorithm>
#include <cstdio>

#include "freiman/errors.hpp"

namespace freiman {

std::string to_hex(Word w) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(w));
  return buf;
}

Point::Point(int dim, Word coords) : dim_(dim), coords_(coords) {
  if (dim < 0 || dim > kMaxAmbientDim) throw InvalidArgument("ambient dimension out of range: " + std::to_string(dim));
  if ((coords & ~dim_mask(dim)) != 0)
    throw InvalidArgument("point " + to_hex(coords) + " out of range for dim " + std::to_string(dim));
}

Point Point::operator+(const Point& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch("point dimensions differ");
  return Point(dim_, coords_ ^ other.coords_);
}

std::string to_string(const Point& p) { return to_hex(p.coords()); }

int PointSet::check_dim(int dim) {
  if (dim < 0 || dim > kMaxAmbientDim) throw InvalidArgument("ambient dimension out of range: " + std::to_string(dim));
  return dim;
}

PointSet::PointSet(int dim, std::vector<Word> points) : dim_(check_dim(dim)), points_(std::move(points)) {
  const Word mask = dim_mask(dim_);
  for (Word p : points_)
    if (p & ~mask) throw InvalidArgument("point " + to_hex(p) + " out of range for dim " + std::to_string(dim_));
  std::sort(points_.begin(), points_.end());
  if (auto it = std::adjacent_find(points_.begin(), points_.end()); it != points_.end())
    throw InvalidArgument("duplicate point " + to_hex(*it));
}

PointSet PointSet::deduplicated(int dim, std::vector<Word> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return PointSet(dim, std::move(points));
}

bool PointSet::contains(Word x) const { return std::binary_search(points_.begin(), points_.end(), x); }

Word PointSet::min() const {
  if (points_.empty()) throw InvalidArgument("empty point set has no minimum");
  return points_.front();
}

Subspace::Subspace(int ambient_dim) : dim_(ambient_dim) {
  if (ambient_dim < 0 || ambient_dim > kMaxAmbientDim) throw InvalidArgument("ambient dimension out of range");
}

Subspace Subspace::span(int ambient_dim, std::span<const Word> vectors) {
  Subspace s(ambient_dim);
  for (Word v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) s.insert(Word{1} << i);
  return s;
}

Word Subspace::reduce(Word x) const noexcept {
  Word hits = x & pivots_;
  if (!hits) return x;
  // Rows are sorted by pivot, so row k owns the k-th lowest pivot bit.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Word pbit = Word{1} << (63 - __builtin_clzll(rows_[k]));
    if (x & pbit) x ^= rows_[k];
  }
  return x;
}

Word Subspace::coordinates(Word x) const noexcept {
  Word c = 0;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const int p = 63 - __builtin_clzll(rows_[k]);
    c |= ((x >> p) & 1U) << k;
  }
  return c;
}

Word Subspace::element(Word coords) const noexcept {
  Word x = 0;
  while (coords) {
    x ^= rows_[__builtin_ctzll(coords)];
    coords &= coords - 1;
  }
  return x;
}

std::vector<Word> Subspace::elements() const {
  if (rank() > 40) throw InstanceTooLarge("subspace too large to enumerate");
  std::vector<Word> out(std::size_t{1} << rank());
  Word cur = 0;
  out[0] = 0;
  // Gray-code walk: each step flips one basis vector.
  for (std::size_t i = 1; i < out.size(); ++i) {
    cur ^= rows_[__builtin_ctzll(i)];
    out[i ^ (i >> 1)] = cur;
  }
  return out;
}

bool Subspace::insert(Word v) {
  if (v & ~dim_mask(dim_)) throw DimensionMismatch("vector " + to_hex(v) + " outside ambient dimension");
  v = reduce(v);
  if (v == 0) return false;
  const int p = 63 - __builtin_clzll(v);
  const Word pbit = Word{1} << p;
  // v is already zero at every existing pivot; clear p from the other rows.
  for (Word& r : rows_)
    if (r & pbit) r ^= v;
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), v,
                              [](Word a, Word b) { return __builtin_clzll(a) > __builtin_clzll(b); });
  rows_.insert(pos, v);
  pivots_ |= pbit;
  return true;
}

Subspace Subspace::join(const Subspace& other) const {
  if (other.dim_ != dim_) throw DimensionMismatch("subspace dimensions differ");
  Subspace s = *this;
  for (Word r : other.rows_) s.insert(r);
  return s;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.dim_ != dim_) throw DimensionMismatch("subspace dimensions differ");
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](Word r) { return contains(r); });
}

Coset::Coset(Word rep, Subspace subspace) : rep_(subspace.reduce(rep)), subspace_(std::move(subspace)) {
  if (rep & ~dim_mask(subspace_.ambient_dim())) throw DimensionMismatch("coset representative outside ambient dimension");
}

bool Coset::contains(const Coset& other) const {
  return subspace_.contains(other.subspace_) && contains(other.rep_);
}

std::vector<Word> Coset::elements() const {
  auto e = subspace_.elements();
  for (Word& x : e) x ^= rep_;
  return e;
}

LinearMap::LinearMap(int in_dim, int out_dim, std::vector<Word> columns)
    : in_dim_(in_dim), out_dim_(out_dim), columns_(std::move(columns)) {
  if (in_dim < 0 || in_dim > kMaxAmbientDim || out_dim < 0 || out_dim > kMaxAmbientDim)
    throw InvalidArgument("linear map dimension out of range");
  if (static_cast<int>(columns_.size()) != in_dim) throw DimensionMismatch("linear map needs one column per input coordinate");
  for (Word c : columns_)
    if (c & ~dim_mask(out_dim)) throw DimensionMismatch("linear map column outside output dimension");
}

LinearMap LinearMap::identity(int dim) {
  std::vector<Word> cols(dim);
  for (int i = 0; i < dim; ++i) cols[i] = Word{1} << i;
  return LinearMap(dim, dim, std::move(cols));
}

int LinearMap::rank() const { return Subspace::span(out_dim_, columns_).rank(); }

LinearMap LinearMap::compose(const LinearMap& inner) const {
  if (inner.out_dim_ != in_dim_) throw DimensionMismatch("cannot compose linear maps");
  std::vector<Word> cols(inner.columns_.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = apply(inner.columns_[i]);
  return LinearMap(inner.in_dim_, out_dim_, std::move(cols));
}

Embedding::Embedding(LinearMap linear, Word offset) : linear_(std::move(linear)), offset_(offset) {
  if (offset & ~dim_mask(linear_.out_dim())) throw DimensionMismatch("embedding offset outside output dimension");
  if (linear_.rank() != linear_.in_dim()) throw InvalidArgument("embedding columns are linearly dependent");
}

Embedding Embedding::compose(const Embedding& inner) const {
  return Embedding(linear_.compose(inner.linear_), apply(inner.offset_));
}

Subspace Embedding::image(const Subspace& s) const {
  if (s.ambient_dim() != in_dim()) throw DimensionMismatch("subspace not in embedding domain");
  Subspace out(out_dim());
  for (Word r : s.basis()) out.insert(linear_.apply(r));
  return out;
}

Subspace rref_basis(int ambient_dim, std::span<const Word> vectors) { return Subspace::span(ambient_dim, vectors); }

Subspace rref_basis(int ambient_dim, std::span<const Point> vectors) {
  Subspace s(ambient_dim);
  for (const Point& p : vectors) {
    if (p.dim() != ambient_dim) throw DimensionMismatch("vector dimension differs from ambient dimension");
    s.insert(p.coords());
  }
  return s;
}

Coset affine_span(const PointSet& a) {
  if (a.empty()) throw InvalidArgument("affine span of an empty set");
  const Word a0 = a.min();
  Subspace s(a.dim());
  for (Word x : a.words()) s.insert(x ^ a0);
  return Coset(a0, std::move(s));
}

}  // namespace freiman
