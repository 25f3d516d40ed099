#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "freiman/dense_set.hpp"
#include "freiman/errors.hpp"
#include "freiman/f2.hpp"
#include "freiman/oracles.hpp"
#include "freiman/rational.hpp"
#include "test_util.hpp"

using namespace freiman;
using freiman::testing::Rng;

TEST_CASE("points and point sets validate their range") {
  CHECK_THROWS_AS(Point(3, 0b1000), InvalidArgument);
  CHECK_THROWS_AS(Point(65, 0), InvalidArgument);
  CHECK((Point(3, 0b101) + Point(3, 0b110)).coords() == 0b011);
  CHECK_THROWS_AS(Point(3, 1) + Point(4, 1), DimensionMismatch);

  const PointSet a(3, {0b111, 0b000, 0b010});
  CHECK(std::vector<Word>(a.words().begin(), a.words().end()) == std::vector<Word>{0, 2, 7});
  CHECK(a.contains(7));
  CHECK_FALSE(a.contains(1));
  CHECK_THROWS_AS(PointSet(3, {1, 1}), InvalidArgument);
  CHECK_THROWS_AS(PointSet(3, {8}), InvalidArgument);
  CHECK(PointSet::deduplicated(3, {1, 1, 2}).size() == 2);
  CHECK(PointSet(64, {~Word{0}}).size() == 1);
}

TEST_CASE("rref basis of small inputs") {
  const std::vector<Word> v{0b011, 0b101, 0b110};
  const Subspace s = rref_basis(3, v);
  CHECK(s.rank() == 2);
  CHECK(s.contains(0b110));
  CHECK_FALSE(s.contains(0b001));

  CHECK(rref_basis(5, std::vector<Word>{}).rank() == 0);
  CHECK(rref_basis(5, std::vector<Word>{0, 0}).rank() == 0);
  CHECK(Subspace::full(6).rank() == 6);
  CHECK(Subspace::full(64).rank() == 64);

  const std::vector<Point> pts{Point(4, 0b0001), Point(4, 0b0010), Point(4, 0b0011)};
  CHECK(rref_basis(4, pts).rank() == 2);
}

TEST_CASE("rref rows are reduced and ordered by pivot") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 64);
    std::vector<Word> v(rng() % 12);
    for (auto& x : v) x = rng() & dim_mask(dim);
    const Subspace s = rref_basis(dim, v);
    for (int i = 0; i < s.rank(); ++i) {
      if (i > 0) CHECK(s.pivot(i - 1) < s.pivot(i));
      for (int j = 0; j < s.rank(); ++j)
        if (j != i) CHECK(((s.basis()[j] >> s.pivot(i)) & 1U) == 0);
    }
    for (Word x : v) CHECK(s.contains(x));
  }
}

TEST_CASE("rank agrees with plain elimination on 50 random vectors in F_2^8") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Word> v(50);
    for (auto& x : v) x = rng() & 0xff;
    if (trial % 3 == 0)
      for (auto& x : v) x &= 0x0f;  // force low rank now and then
    CHECK(rref_basis(8, v).rank() == oracle::rank(v, 8));
  }
}

TEST_CASE("subspace coordinates, elements and join") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 20);
    std::vector<Word> v(1 + rng() % 6);
    for (auto& x : v) x = rng() & dim_mask(dim);
    const Subspace s = rref_basis(dim, v);
    const auto elems = s.elements();
    REQUIRE(elems.size() == (std::size_t{1} << s.rank()));
    for (std::size_t c = 0; c < elems.size(); ++c) {
      CHECK(s.contains(elems[c]));
      CHECK(s.element(c) == elems[c]);
      CHECK(s.coordinates(elems[c]) == c);
    }
    CHECK(std::set<Word>(elems.begin(), elems.end()).size() == elems.size());
    // Coordinates are linear on the whole space.
    const Word x = rng() & dim_mask(dim), y = rng() & dim_mask(dim);
    CHECK((s.coordinates(x) ^ s.coordinates(y)) == s.coordinates(x ^ y));
    CHECK(s.contains(x ^ s.reduce(x)));

    std::vector<Word> u(1 + rng() % 4);
    for (auto& z : u) z = rng() & dim_mask(dim);
    const Subspace t = rref_basis(dim, u);
    const Subspace j = s.join(t);
    CHECK(j.contains(s));
    CHECK(j.contains(t));
    std::vector<Word> all = v;
    all.insert(all.end(), u.begin(), u.end());
    CHECK(j.rank() == oracle::rank(all, dim));
  }
}

TEST_CASE("affine span of small sets") {
  const Coset c = affine_span(PointSet(3, {0b001, 0b011, 0b101}));
  CHECK(c.rank() == 2);
  CHECK(c.contains(0b111));
  CHECK_FALSE(c.contains(0b000));

  CHECK(affine_span(PointSet(5, {0b10110})).rank() == 0);
  CHECK(affine_span(PointSet(5, {0b10110})).contains(0b10110));
  CHECK_THROWS_AS(affine_span(PointSet(5)), InvalidArgument);
}

TEST_CASE("affine span is the smallest coset, for every subset of F_2^3") {
  for (std::uint64_t mask = 1; mask < 256; ++mask) {
    std::vector<Word> pts;
    for (Word v = 0; v < 8; ++v)
      if ((mask >> v) & 1U) pts.push_back(v);
    const PointSet a(3, pts);
    const Coset c = affine_span(a);
    for (Word x : pts) CHECK(c.contains(x));
    CHECK((std::uint64_t{1} << c.rank()) ==
          oracle::min_coset_size_exhaustive(DenseSet::from_members(3, pts)));
  }
}

TEST_CASE("linear maps and embeddings") {
  const LinearMap m(3, 2, {0b01, 0b10, 0b11});
  CHECK(m.apply(0b111) == 0);
  CHECK(m.rank() == 2);
  CHECK_THROWS_AS(LinearMap(3, 2, {0b100, 0, 0}), DimensionMismatch);
  CHECK_THROWS_AS(LinearMap(3, 2, {0, 0}), DimensionMismatch);
  CHECK(LinearMap::identity(2).compose(m) == m);
  CHECK_THROWS_AS(m.compose(m), DimensionMismatch);

  CHECK_THROWS_AS(Embedding(m, 0), InvalidArgument);  // not injective
  const Embedding e(LinearMap(2, 4, {0b0011, 0b0100}), 0b1000);
  CHECK(e.apply(0b11) == 0b1111);
  const Subspace img = e.image(Subspace::full(2));
  CHECK(img.rank() == 2);
  CHECK(img.contains(0b0111));
  const Embedding f(LinearMap(4, 5, {1, 2, 4, 8}), 0b10000);
  CHECK(f.compose(e).apply(0b01) == (0b10000 ^ 0b1000 ^ 0b0011));
}

TEST_CASE("compress examples") {
  const PointSet a(3, {0b000, 0b011, 0b101});
  const Compressed c = compress(a);
  CHECK(c.set.dim() == 2);
  CHECK(c.set.size() == 3);
  CHECK(decompress(c.set, c.embedding) == a);

  const PointSet single(40, {Word{1} << 39});
  const Compressed cs = compress(single);
  CHECK(cs.set.dim() == 0);
  CHECK(cs.set.size() == 1);
  CHECK(decompress(cs.set, cs.embedding) == single);
}

TEST_CASE("compress round trip on random sparse sets in large dimension") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 20 + static_cast<int>(rng() % 45);
    std::vector<Word> pts(1 + rng() % 20);
    for (auto& x : pts) x = rng() & dim_mask(dim);
    const PointSet a = PointSet::deduplicated(dim, pts);
    const Compressed c = compress(a);
    CHECK(c.set.dim() == affine_span(a).rank());
    CHECK(decompress(c.set, c.embedding) == a);
  }
}

TEST_CASE("compress refuses spans above the dense limit") {
  std::vector<Word> pts{0};
  for (int i = 0; i < 30; ++i) pts.push_back(Word{1} << i);
  CHECK_THROWS_AS(compress(PointSet(40, pts), 22), InstanceTooLarge);
  CHECK_THROWS_AS(compress(PointSet(40)), InvalidArgument);
}

TEST_CASE("rationals print and parse exactly") {
  CHECK(to_string(Rational(BigInt(26), BigInt(12))) == "13/6");
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(parse_rational("13/6") == Rational(BigInt(13), BigInt(6)));
  CHECK(parse_rational("4") == Rational(4));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
  CHECK(ceil_sqrt(BigInt(49)) == 7);
  CHECK(ceil_sqrt(BigInt(50)) == 8);
  CHECK(ceil_sqrt(Rational(BigInt(49), BigInt(4))) == 4);  // sqrt = 3.5
  CHECK(ceil_sqrt(Rational(9)) == 3);
}
