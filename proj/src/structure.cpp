#include "freiman/structure.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "freiman/errors.hpp"
#include "freiman/spectral.hpp"

namespace freiman {

namespace {

Rational density_of(const DenseSet& s) { return s.density(); }

void ensure_embeds_into(const Restriction& r, const DenseSet& parent, const char* what) {
  bool ok = true;
  r.set.for_each([&](Word y) { ok = ok && parent.contains(r.embedding.apply(y)); });
  FREIMAN_ENSURE(ok, what);
}

// |X| compared with K|Y| exactly: |X| den(K) <= num(K) |Y|.
bool within_doubling(std::size_t sum_size, std::size_t base_size, const Rational& k) {
  return BigInt(sum_size) * denominator(k) <= numerator(k) * BigInt(base_size);
}

bool is_power_of_two(const BigInt& v) { return v > 0 && (v & (v - 1)) == 0; }

// Certifies W ⊆ 4A and that W is a subspace.
void certify_inside_four_fold(const Subspace& w, const DenseSet& a) {
  const DenseSet four = conv4_support(a);
  FREIMAN_ENSURE(four == iterated_sumset(a, 4), "4-fold convolution support differs from 4A");
  const auto elems = w.elements();
  DenseSet as_set = DenseSet::from_members(a.dim(), elems);
  FREIMAN_ENSURE(is_subspace(as_set), "extracted W is not a subspace");
  FREIMAN_ENSURE(as_set.is_subset_of(four), "extracted W is not contained in 4A");
}

}  // namespace

PureStep pure_increment_step(const DenseSet& a) {
  if (a.empty()) throw InvalidArgument("density increment on an empty set");
  const DenseSet four = iterated_sumset(a, 4);
  if (four.is_full()) return Full{};

  const int m = a.dim();
  const Spectrum spectrum = fourier_indicator(a);
  const PeakCharacter peak = max_nontrivial(spectrum);
  const Wide t = peak.magnitude;
  const Wide n = static_cast<Wide>(a.size());
  // sup |χ̂_A(γ)| >= α^{3/2}, squared and cleared of denominators.
  FREIMAN_ENSURE(t * t * (Wide{1} << m) >= n * n * n, "no character with |T|^2 2^m >= |A|^3 although 4A is not full");

  const int side = peak.coefficient >= 0 ? 0 : 1;
  Restriction r = hyperplane_restrict(a, peak.gamma, side);
  const Rational alpha = density_of(a);
  const Rational alpha_next = density_of(r.set);
  const Rational gain = alpha_next - alpha;
  // α' >= α (1 + α^{1/2}/2)  <=>  α' >= α and 4 (α' - α)^2 >= α^3
  FREIMAN_ENSURE(gain >= 0 && 4 * gain * gain >= alpha * alpha * alpha, "density increment below α(1 + α^{1/2}/2)");
  ensure_embeds_into(r, a, "restricted set does not embed into A");
  return Increment{peak.gamma, peak.coefficient, side, std::move(r)};
}

std::int64_t pure_density_budget(const Rational& alpha) {
  if (alpha <= 0 || alpha > 1) throw InvalidArgument("density must lie in (0, 1]");
  // ⌈7 α^{-1/2}⌉ = smallest n with n^2 >= 49 / α
  return static_cast<std::int64_t>(ceil_sqrt(Rational(49) / alpha)) + 1;
}

std::int64_t doubling_budget(const Rational& doubling, const Rational& alpha) {
  if (alpha <= 0 || alpha > 1) throw InvalidArgument("density must lie in (0, 1]");
  if (doubling < 1) throw InvalidArgument("doubling constant below 1");
  std::int64_t iteration;
  const Rational inv = 1 / alpha;
  if (denominator(inv) == 1 && is_power_of_two(numerator(inv))) {
    // log2(1/α) = l is an integer: ⌈sqrt(8K) l⌉ = ⌈sqrt(8K l^2)⌉
    const unsigned l = static_cast<unsigned>(msb(numerator(inv)));
    iteration = static_cast<std::int64_t>(ceil_sqrt(Rational(8) * doubling * l * l));
  } else {
    // log2 of a rational that is not a power of two is transcendental, so the
    // product with sqrt(8K) is never an integer and a wide float decides the ceiling.
    using Float = boost::multiprecision::cpp_bin_float_100;
    const Float k = Float(numerator(doubling)) / Float(denominator(doubling));
    const Float l = (log(Float(numerator(inv))) - log(Float(denominator(inv)))) / log(Float(2));
    iteration = static_cast<std::int64_t>(ceil(sqrt(8 * k) * l));
  }
  const auto terminal = static_cast<std::int64_t>(ceil_sqrt(Rational(98) * doubling));
  return iteration + terminal + 2;
}

StructureResult pure_density_subspace(const DenseSet& a) {
  if (a.empty()) throw InvalidArgument("pure density iteration on an empty set");
  StructureResult res{Subspace(a.dim())};
  res.alpha = a.density();
  res.doubling = 1;
  res.bound_budget = pure_density_budget(res.alpha);

  DenseSet cur = a;
  Embedding emb = Embedding::identity(a.dim());
  for (int k = 0;; ++k) {
    PureStep step = pure_increment_step(cur);
    if (std::holds_alternative<Full>(step)) {
      // 4(x + A_k) = 4A_k in characteristic 2, so only the linear part matters.
      res.w = emb.image(Subspace::full(cur.dim()));
      break;
    }
    auto& inc = std::get<Increment>(step);
    const Rational before = cur.density();
    emb = emb.compose(inc.restricted.embedding);
    cur = std::move(inc.restricted.set);
    StepRecord rec{k, cur.dim() + 1, inc.gamma, inc.coefficient, inc.side, std::nullopt,
                   before, cur.density(), std::nullopt, std::nullopt, emb, emb.offset(), emb.offset()};
    FREIMAN_ENSURE(rec.alpha_after > rec.alpha_before, "density did not strictly increase");
    res.trace.push_back(std::move(rec));
    FREIMAN_ENSURE(static_cast<std::int64_t>(res.trace.size()) <= res.bound_budget,
                   "pure density iteration exceeded its step budget");
  }
  res.codim = a.dim() - res.w.rank();
  FREIMAN_ENSURE(res.codim == static_cast<int>(res.trace.size()), "codimension differs from step count");
  FREIMAN_ENSURE(res.codim <= res.bound_budget, "codimension exceeds ⌈7α^{-1/2}⌉ + 1");
  certify_inside_four_fold(res.w, a);
  return res;
}

PairStep pair_increment_step(const DenseSet& a, const DenseSet& b, const Rational& doubling) {
  if (a.dim() != b.dim()) throw DimensionMismatch("A and B live in different spaces");
  if (a.empty() || b.empty()) throw InvalidArgument("paired iteration needs nonempty A and B");
  if (!within_doubling(sumset(a, b).size(), b.size(), doubling))
    throw InvalidArgument("hypothesis |A+B| <= K|B| fails for K = " + to_string(doubling));

  const int m = a.dim();
  // β >= (2K)^{-1}  <=>  2K|B| >= 2^m
  if (2 * doubling * BigInt(b.size()) >= Rational(pow2(m))) return Terminal{pure_density_subspace(b)};

  const Spectrum spectrum = fourier_indicator(a);
  const PeakCharacter peak = max_nontrivial(spectrum);
  const BigInt t(peak.magnitude);
  const BigInt n(a.size());
  // sup |χ̂_A(γ)| >= (2K)^{-1/2} α  <=>  2K T^2 >= |A|^2
  FREIMAN_ENSURE(2 * numerator(doubling) * t * t >= denominator(doubling) * n * n,
                 "no character with 2K T^2 >= |A|^2 although β < (2K)^{-1}");

  const int side_a = peak.coefficient >= 0 ? 0 : 1;
  Restriction ra = hyperplane_restrict(a, peak.gamma, side_a);
  const Rational alpha = a.density();
  const Rational alpha_next = ra.set.density();
  const Rational gain = alpha_next - alpha;
  // α' >= α (1 + 2^{-3/2} K^{-1/2})  <=>  α' >= α and 8K (α' - α)^2 >= α^2
  FREIMAN_ENSURE(gain >= 0 && 8 * doubling * gain * gain >= alpha * alpha,
                 "density increment below α(1 + 2^{-3/2}K^{-1/2})");
  ensure_embeds_into(ra, a, "A' does not embed into A");

  // Averaging: one side of B keeps |A' + B_i| <= K |B_i|; side 0 wins ties.
  std::optional<Restriction> chosen;
  int side_b = 0;
  for (int side = 0; side < 2 && !chosen; ++side) {
    Restriction rb = hyperplane_restrict(b, peak.gamma, side);
    if (rb.set.empty()) continue;
    if (within_doubling(sumset(ra.set, rb.set).size(), rb.set.size(), doubling)) {
      chosen = std::move(rb);
      side_b = side;
    }
  }
  FREIMAN_ENSURE(chosen.has_value(), "neither side of B keeps |A'+B'| <= K|B'|");
  ensure_embeds_into(*chosen, b, "B' does not embed into B");
  return PairIncrement{peak.gamma, peak.coefficient, side_a, side_b, std::move(ra), std::move(*chosen)};
}

StructureResult doubling_subspace(const DenseSet& a) {
  if (a.empty()) throw InvalidArgument("doubling iteration on an empty set");
  StructureResult res{Subspace(a.dim())};
  res.alpha = a.density();
  res.doubling = doubling_constant(a);
  res.bound_budget = doubling_budget(res.doubling, res.alpha);
  const Rational& k_fixed = res.doubling;

  DenseSet cur_a = a;
  DenseSet cur_b = a;
  Embedding emb_a = Embedding::identity(a.dim());
  Embedding emb_b = Embedding::identity(a.dim());
  for (int k = 0;; ++k) {
    PairStep step = pair_increment_step(cur_a, cur_b, k_fixed);
    if (auto* term = std::get_if<Terminal>(&step)) {
      // W sits inside 4B_k; B_k's translate cancels in 4B_k.
      res.w = emb_b.image(term->inner.w);
      res.terminal_trace = std::move(term->inner.trace);
      break;
    }
    auto& inc = std::get<PairIncrement>(step);
    const Rational alpha_before = cur_a.density();
    const Rational beta_before = cur_b.density();
    emb_a = emb_a.compose(inc.a.embedding);
    emb_b = emb_b.compose(inc.b.embedding);
    FREIMAN_ENSURE(emb_a.linear() == emb_b.linear(), "A and B lines left the same subspace");
    cur_a = std::move(inc.a.set);
    cur_b = std::move(inc.b.set);
    FREIMAN_ENSURE(within_doubling(sumset(cur_a, cur_b).size(), cur_b.size(), k_fixed),
                   "|A_k + B_k| <= K|B_k| lost");
    StepRecord rec{k,           cur_a.dim() + 1,   inc.gamma,    inc.coefficient, inc.side_a,
                   inc.side_b,  alpha_before,      cur_a.density(), beta_before,  cur_b.density(),
                   emb_a,       emb_a.offset(),    emb_b.offset()};
    FREIMAN_ENSURE(rec.alpha_after > rec.alpha_before, "density did not strictly increase");
    res.trace.push_back(std::move(rec));
    FREIMAN_ENSURE(static_cast<std::int64_t>(res.trace.size()) <= res.bound_budget,
                   "doubling iteration exceeded its step budget");
  }
  res.codim = a.dim() - res.w.rank();
  FREIMAN_ENSURE(res.codim <= res.bound_budget, "codimension exceeds the K^{1/2} log(1/α) budget");
  certify_inside_four_fold(res.w, a);
  return res;
}

}  // namespace freiman
