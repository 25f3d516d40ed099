#include "freiman/covering.hpp"

#include <optional>

#include "freiman/errors.hpp"

namespace freiman {

PointSet ruzsa_cover(const DenseSet& s, const DenseSet& b) {
  if (s.dim() != b.dim()) throw DimensionMismatch("ruzsa cover of sets in different spaces");
  if (b.empty()) throw InvalidArgument("ruzsa cover by an empty set");
  const DenseSet bb = sumset(b, b);
  DenseSet blocked(s.dim());
  std::vector<Word> chosen;
  // ξ + B meets ξ' + B iff ξ ∈ ξ' + B + B.
  s.for_each([&](Word p) {
    if (blocked.contains(p)) return;
    chosen.push_back(p);
    blocked |= translate(bb, p);
  });

  FREIMAN_ENSURE(s.is_subset_of(blocked), "S is not covered by X + B + B");
  DenseSet covered(s.dim());
  for (Word x : chosen) covered |= translate(b, x);
  FREIMAN_ENSURE(covered.size() == chosen.size() * b.size(), "translates ξ + B are not pairwise disjoint");
  FREIMAN_ENSURE(chosen.size() * b.size() <= sumset(s, b).size(), "|X| exceeds |S+B| / |B|");
  return PointSet(s.dim(), std::move(chosen));
}

CoverReport chang_cover(const DenseSet& a, const Coset& q) {
  if (a.empty()) throw InvalidArgument("covering an empty set");
  if (q.ambient_dim() != a.dim()) throw DimensionMismatch("coset and set live in different spaces");
  const DenseSet four = iterated_sumset(a, 4);
  for (Word x : q.elements())
    if (!four.contains(x)) throw InvalidArgument("coset Q is not contained in 4A");

  Subspace v = q.subspace();
  Word rep = q.rep();
  std::vector<std::size_t> rounds;
  std::optional<Coset> result;
  while (!result) {
    const DenseSet b = DenseSet::from_members(a.dim(), Coset(rep, v).elements());
    const PointSet x = ruzsa_cover(a, b);
    rounds.push_back(x.size());
    const Word xi0 = x.words().front();
    if (x.size() == 1) {
      result = Coset(xi0, v);
      break;
    }
    // After absorbing the differences, A lies in one coset of the grown subspace.
    FREIMAN_ENSURE(rounds.size() < 2, "covering did not terminate one round after absorption");
    Subspace grown = v;
    for (Word xi : x.words()) grown.insert(xi ^ xi0);
    FREIMAN_ENSURE(grown.rank() >= v.rank(), "covering subspace shrank");
    v = std::move(grown);
    rep = xi0;
  }

  bool contained = true;
  a.for_each([&](Word p) { contained = contained && result->contains(p); });
  FREIMAN_ENSURE(contained, "final coset does not contain A");

  const BigInt na(a.size());
  CoverReport rep_out{q, Rational(pow2(q.rank()), na), *result};
  rep_out.overhead = result->rank() - q.rank();
  rep_out.round_sizes = std::move(rounds);
  rep_out.final_ratio = Rational(pow2(result->rank()), na);
  return rep_out;
}

Coset minimal_coset_oracle(const PointSet& a) { return affine_span(a); }

}  // namespace freiman
