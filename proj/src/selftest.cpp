#include "freiman/selftest.hpp"

#include <functional>
#include <random>

#include "freiman/covering.hpp"
#include "freiman/errors.hpp"
#include "freiman/generators.hpp"
#include "freiman/model.hpp"
#include "freiman/oracles.hpp"
#include "freiman/pipeline.hpp"
#include "freiman/spectral.hpp"
#include "freiman/structure.hpp"

namespace freiman {

namespace {

// Random nonempty subset of F_2^m of density at least 1/min_inverse_density
// (any density when 0).
DenseSet random_set(std::mt19937_64& rng, int m, std::uint64_t min_inverse_density = 0) {
  const std::uint64_t universe = std::uint64_t{1} << m;
  const std::uint64_t lo = min_inverse_density ? std::max<std::uint64_t>(1, universe / min_inverse_density) : 1;
  const std::uint64_t size = lo + rng() % (universe - lo + 1);
  const PointSet p = gen_random(m, size, rng());
  return DenseSet::from_members(m, p.words());
}

CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
  try {
    std::string failure = body();
    return {name, failure.empty(), failure.empty() ? "ok" : failure};
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

}  // namespace

std::vector<CheckResult> selftest(std::uint64_t seed, const std::vector<PointSet>& corpus) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;

  out.push_back(run_check("spectral identities", [&]() -> std::string {
    for (int i = 0; i < 50; ++i) {
      const DenseSet a = random_set(rng, 1 + static_cast<int>(rng() % 12));
      const Spectrum s = fourier_indicator(a);  // verifies Parseval on construction
      std::vector<Wide> v(s.coeffs().begin(), s.coeffs().end());
      const auto twice = fwht(fwht(v));
      bool ok = true;
      for (Word x = 0; x < a.universe_size(); ++x)
        ok = ok && twice[x] == static_cast<Wide>(s.coeffs()[x]) * static_cast<Wide>(a.universe_size());
      if (!ok) return "fwht(fwht(T)) != 2^m T";
      if (a.dim() <= 8) {
        const auto direct = oracle::direct_spectrum(a);
        if (!std::equal(direct.begin(), direct.end(), s.coeffs().begin())) return "spectrum differs from direct sum";
      }
    }
    return {};
  }));

  out.push_back(run_check("sumset routes agree", [&]() -> std::string {
    for (int i = 0; i < 50; ++i) {
      const int m = 1 + static_cast<int>(rng() % 10);
      const DenseSet x = random_set(rng, m, 64), y = random_set(rng, m, 64);
      const DenseSet a = sumset_translate_union(x, y);
      if (a != sumset_fwht(x, y)) return "translate-union and FWHT routes differ";
      if (m <= 8 && a != oracle::pairwise_sumset(x, y)) return "sumset differs from pairwise enumeration";
      if (conv4_support(x) != iterated_sumset(x, 4)) return "conv4 support differs from 4A";
    }
    return {};
  }));

  out.push_back(run_check("restriction and compression round trips", [&]() -> std::string {
    for (int i = 0; i < 30; ++i) {
      const int m = 1 + static_cast<int>(rng() % 12);
      const DenseSet x = random_set(rng, m);
      const Word g = 1 + rng() % (x.universe_size() - 1);
      const Restriction r0 = hyperplane_restrict(x, g, 0), r1 = hyperplane_restrict(x, g, 1);
      if (r0.set.size() + r1.set.size() != x.size()) return "hyperplane sides do not partition X";
      DenseSet back(m);
      for (const auto* r : {&r0, &r1}) r->set.for_each([&](Word y) { back.insert(r->embedding.apply(y)); });
      if (back != x) return "hyperplane embeddings do not reproduce X";
      const PointSet p = gen_random(20 + static_cast<int>(rng() % 20), 1 + rng() % 20, rng());
      const Compressed c = compress(p);
      if (decompress(c.set, c.embedding) != p) return "compress/decompress is not exact";
    }
    return {};
  }));

  out.push_back(run_check("Plünnecke–Ruzsa monitor", [&]() -> std::string {
    for (int i = 0; i < 30; ++i) {
      const DenseSet a = random_set(rng, 2 + static_cast<int>(rng() % 9), 256);
      const Rational k = doubling_constant(a);
      Rational ks = k;
      for (unsigned s = 2; s <= 5; ++s) {
        ks *= k;
        if (Rational(BigInt(iterated_sumset(a, s).size())) > ks * BigInt(a.size())) return "|sA| > K^s |A|";
      }
    }
    return {};
  }));

  out.push_back(run_check("pure density iteration", [&]() -> std::string {
    for (int i = 0; i < 30; ++i) {
      const DenseSet a = random_set(rng, 1 + static_cast<int>(rng() % 12), 32);
      const StructureResult r = pure_density_subspace(a);  // certifies W ⊆ 4A and the budget
      if (r.codim > r.bound_budget) return "budget exceeded";
    }
    return {};
  }));

  out.push_back(run_check("doubling iteration", [&]() -> std::string {
    for (int i = 0; i < 20; ++i) {
      const DenseSet a = random_set(rng, 1 + static_cast<int>(rng() % 12), 64);
      const StructureResult r = doubling_subspace(a);
      if (r.codim > r.bound_budget) return "budget exceeded";
    }
    return {};
  }));

  out.push_back(run_check("model certification", [&]() -> std::string {
    for (int i = 0; i < 10; ++i) {
      const PointSet a = gen_random(16 + static_cast<int>(rng() % 16), 3 + rng() % 5, rng());
      const unsigned s = 1 + static_cast<unsigned>(rng() % 2);
      const Model m = find_model(a, s, rng());
      if (!oracle::freiman_iso_by_tuples(m.map, a, s)) return "model map fails the tuple definition";
      if (doubling_constant(m.a_model) != doubling_constant(a)) return "model changed the doubling constant";
    }
    return {};
  }));

  out.push_back(run_check("extremal instance d=2 k=3", [&]() -> std::string {
    const PointSet a = gen_extremal(2, 3, 4);
    const PipelineReport r = run_pipeline(a);
    if (r.sumset_size != 13) return "|A+A| != 13";
    if (r.min_coset_size != 16) return "minimal coset size != 16";
    if (!r.contains_a) return "final coset misses A";
    return {};
  }));

  out.push_back(run_check("subspace instance", [&]() -> std::string {
    const PipelineReport r = run_pipeline(gen_subspace(4, 10));
    return r.final_ratio == 1 ? "" : "final ratio " + to_string(r.final_ratio) + " != 1";
  }));

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out.push_back(run_check("corpus set " + std::to_string(i), [&]() -> std::string {
      const PipelineReport r = run_pipeline(corpus[i]);
      return r.contains_a && r.certificates_ok ? "" : "pipeline certificates failed";
    }));
  }
  return out;
}

}  // namespace freiman
