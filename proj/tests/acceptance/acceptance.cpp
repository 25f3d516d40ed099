// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 1).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "freiman/covering.hpp"
#include "freiman/errors.hpp"
#include "freiman/generators.hpp"
#include "freiman/model.hpp"
#include "freiman/oracles.hpp"
#include "freiman/pipeline.hpp"
#include "freiman/rational.hpp"
#include "freiman/spectral.hpp"
#include "freiman/structure.hpp"
#include "freiman/sweep.hpp"

using namespace freiman;

namespace {

using Clock = std::chrono::steady_clock;
using Rng = std::mt19937_64;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

DenseSet bernoulli(Rng& rng, int dim, std::uint64_t num, std::uint64_t den) {
  DenseSet x(dim);
  for (Word v = 0; v < (Word{1} << dim); ++v)
    if (rng() % den < num) x.insert(v);
  if (x.empty()) x.insert(rng() & dim_mask(dim));
  return x;
}

// Dense random subset of a random subspace of the given codimension, shifted
// by a random vector. 4A then stays inside the subspace.
DenseSet structured(Rng& rng, int dim, int codim, std::uint64_t num, std::uint64_t den) {
  std::vector<Word> gens;
  for (int i = 0; i < dim - codim; ++i) gens.push_back(rng() & dim_mask(dim));
  const Subspace h = Subspace::span(dim, gens);
  const Word shift = rng() & dim_mask(dim);
  DenseSet x(dim);
  for (Word v : h.elements())
    if (rng() % den < num) x.insert(v ^ shift);
  if (x.empty()) x.insert(shift);
  return x;
}

// Smallest c >= 0 with c^2 * q >= p (c = ⌈sqrt(p/q)⌉).
std::int64_t ceil_sqrt_ratio(const BigInt& p, const BigInt& q) {
  std::int64_t c = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(p.convert_to<long double>() /
                                                                                 q.convert_to<long double>())));
  c = std::max<std::int64_t>(c - 2, 0);
  while (BigInt(c) * c * q < p) ++c;
  return c;
}

std::int64_t pure_budget_oracle(std::uint64_t size, int dim) {
  return ceil_sqrt_ratio(BigInt(49) << dim, BigInt(size)) + 1;
}

// The log term in long double, rounded up conservatively (never above the
// true ceiling).
std::int64_t doubling_budget_oracle(const Rational& k, std::uint64_t size, int dim) {
  const long double kd = to_double(k);
  const long double log_term = std::sqrt(8.0L * kd) * (static_cast<long double>(dim) - std::log2(static_cast<long double>(size)));
  const auto first = static_cast<std::int64_t>(std::ceil(log_term - 1e-9L));
  const std::int64_t second = ceil_sqrt_ratio(98 * numerator(k), denominator(k));
  return std::max<std::int64_t>(first, 0) + second + 2;
}

bool subspace_inside(const Subspace& w, const DenseSet& s) {
  for (Word x : w.elements())
    if (!s.contains(x)) return false;
  return true;
}

DenseSet dense_of(const PointSet& a) {
  return DenseSet::from_members(a.dim(), std::vector<Word>(a.words().begin(), a.words().end()));
}

Rational doubling_of(const DenseSet& a) { return Rational(BigInt(sumset(a, a).size()), BigInt(a.size())); }

// ---------------------------------------------------------------------------

Outcome spectral_identities() {
  Outcome o;
  Rng rng(101);
  const auto start = Clock::now();
  for (int i = 0; i < 200; ++i) {
    const int m = static_cast<int>(rng() % 13);
    const DenseSet a = bernoulli(rng, m, 1 + rng() % 15, 16);
    std::vector<Wide> v(std::size_t{1} << m, 0);
    a.for_each([&](Word x) { v[x] = 1; });
    const auto t = fwht(v);
    Wide energy = 0;
    for (Wide c : t) energy += c * c;
    if (energy != static_cast<Wide>(a.size()) << m) o.fail("Parseval fails at instance " + std::to_string(i));
    const auto back = fwht(t);
    for (std::size_t x = 0; x < v.size(); ++x)
      if (back[x] != v[x] << m) o.fail("involution fails at instance " + std::to_string(i));
    const Spectrum s = fourier_indicator(a);
    for (std::size_t g = 0; g < t.size(); ++g)
      if (static_cast<Wide>(s.coeffs()[g]) != t[g]) o.fail("indicator spectrum differs at instance " + std::to_string(i));
  }
  const double secs = seconds_since(start);
  if (secs >= 5) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "200 sets, " + std::to_string(secs) + " s";
  return o;
}

Outcome sumset_paths() {
  Outcome o;
  Rng rng(102);
  int naive = 0;
  for (int i = 0; i < 100; ++i) {
    const int m = static_cast<int>(rng() % 15);
    const DenseSet x = i % 3 == 0 ? structured(rng, m, static_cast<int>(rng() % (m + 1)), 1, 2)
                                  : bernoulli(rng, m, 1, 1 + rng() % 64);
    const DenseSet y = i % 2 ? x : bernoulli(rng, m, 1, 1 + rng() % 64);
    const DenseSet tu = sumset_translate_union(x, y);
    const DenseSet fw = sumset_fwht(x, y);
    if (!(tu == fw)) o.fail("translate-union and FWHT differ at instance " + std::to_string(i));
    if (m <= 8) {
      ++naive;
      if (!(oracle::pairwise_sumset(x, y) == tu)) o.fail("pairwise enumeration differs at instance " + std::to_string(i));
    }
    if (!(conv4_support(x) == iterated_sumset(x, 4))) o.fail("conv4 support differs from 4A at instance " + std::to_string(i));
  }
  if (o.pass) o.detail = "100 instances, " + std::to_string(naive) + " with naive enumeration";
  return o;
}

// Instances for the single-set density criteria: m <= 14, α >= 1/32.
std::vector<DenseSet> density_suite() {
  Rng rng(103);
  std::vector<DenseSet> out;
  while (out.size() < 100) {
    const int m = 1 + static_cast<int>(rng() % 14);
    DenseSet a = out.size() % 2 ? structured(rng, m, static_cast<int>(rng() % std::min(m + 1, 5)), 1 + rng() % 4, 4)
                                : bernoulli(rng, m, 1 + rng() % 32, 32);
    if (a.size() * 32 >= a.universe_size()) out.push_back(std::move(a));
  }
  return out;
}

Outcome dichotomy() {
  Outcome o;
  int not_full = 0;
  const auto suite = density_suite();
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const DenseSet& a = suite[i];
    if (iterated_sumset(a, 4).is_full()) continue;
    ++not_full;
    const auto direct = oracle::direct_spectrum(a);
    std::int64_t best = 0;
    for (std::size_t g = 1; g < direct.size(); ++g) best = std::max<std::int64_t>(best, std::llabs(direct[g]));
    const Wide n = static_cast<Wide>(a.size());
    if (static_cast<Wide>(best) * best * (Wide{1} << a.dim()) < n * n * n)
      o.fail("violation at instance " + std::to_string(i));
    if (max_nontrivial(fourier_indicator(a)).magnitude != best) o.fail("argmax differs at instance " + std::to_string(i));
  }
  if (o.pass) o.detail = "100 instances, " + std::to_string(not_full) + " with 4A not full, 0 violations";
  return o;
}

Outcome pure_budget() {
  Outcome o;
  int max_codim = 0;
  const auto suite = density_suite();
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const DenseSet& a = suite[i];
    const StructureResult r = pure_density_subspace(a);
    const DenseSet four = iterated_sumset(a, 4);
    if (!subspace_inside(r.w, four)) o.fail("W not inside 4A at instance " + std::to_string(i));
    if (r.w.ambient_dim() != a.dim() || r.codim != a.dim() - r.w.rank()) o.fail("codim mismatch at " + std::to_string(i));
    if (r.codim > pure_budget_oracle(a.size(), a.dim())) o.fail("budget exceeded at instance " + std::to_string(i));
    max_codim = std::max(max_codim, r.codim);
  }
  if (o.pass) o.detail = "100 instances, max codim " + std::to_string(max_codim) + ", 0 violations";
  return o;
}

Outcome doubling_budget_check() {
  Outcome o;
  Rng rng(104);
  int count = 0, max_codim = 0;
  double slowest = 0;
  while (count < 50) {
    const int m = 6 + static_cast<int>(rng() % 13);  // 6..18
    DenseSet a(m);
    if (count % 3 == 0) {
      a = bernoulli(rng, m, 1 + rng() % 8, 8);
    } else if (count % 3 == 1) {
      a = structured(rng, m, static_cast<int>(rng() % 4), 1 + rng() % 8, 8);
    } else {
      // A subspace of codimension up to 8 plus a few stray points: sparse, small K.
      a = structured(rng, m, 2 + static_cast<int>(rng() % 7), 1, 1);
      for (int j = 0, extra = 1 + static_cast<int>(rng() % 6); j < extra; ++j) a.insert(rng() & dim_mask(m));
    }
    const Rational k = doubling_of(a);
    if (k > 8) continue;
    ++count;
    const auto start = Clock::now();
    const StructureResult r = doubling_subspace(a);
    const double secs = seconds_since(start);
    slowest = std::max(slowest, secs);
    if (secs >= 10) o.fail("instance " + std::to_string(count) + " took " + std::to_string(secs) + " s");
    if (!subspace_inside(r.w, iterated_sumset(a, 4))) o.fail("W not inside 4A at instance " + std::to_string(count));
    if (r.doubling != k) o.fail("K differs at instance " + std::to_string(count));
    if (r.codim > doubling_budget_oracle(k, a.size(), m)) o.fail("budget exceeded at instance " + std::to_string(count));
    max_codim = std::max(max_codim, r.codim);
  }
  if (o.pass)
    o.detail = "50 instances with K <= 8, max codim " + std::to_string(max_codim) + ", slowest " +
               std::to_string(slowest) + " s";
  return o;
}

// Pipeline instances shared by criteria 6-8.
struct Instance {
  std::string label;
  PointSet a;
  bool subspace = false;
};

std::vector<Instance> end_to_end_suite() {
  std::vector<Instance> out;
  for (int d = 0; d <= 6; ++d)
    for (int k = 1; k <= 6; ++k)
      out.push_back({"extremal d=" + std::to_string(d) + " k=" + std::to_string(k), gen_extremal(d, k, d + k - 1)});
  Rng rng(105);
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const std::uint64_t cap = std::min<std::uint64_t>(300, std::uint64_t{1} << n);
    out.push_back({"random " + std::to_string(i), gen_random(n, 1 + rng() % cap, rng())});
  }
  for (int d = 0; d <= 6; ++d) out.push_back({"subspace d=" + std::to_string(d), gen_subspace(d, 16), true});
  return out;
}

struct Runs {
  std::vector<Instance> instances;
  std::vector<std::optional<PipelineReport>> reports;
  std::vector<std::string> errors;
};

const Runs& pipeline_runs() {
  static const Runs runs = [] {
    Runs r;
    r.instances = end_to_end_suite();
    for (std::size_t i = 0; i < r.instances.size(); ++i) {
      try {
        r.reports.push_back(run_pipeline(r.instances[i].a, {.seed = mix_seed(i)}));
        r.errors.emplace_back();
      } catch (const Error& e) {
        r.reports.emplace_back();
        r.errors.emplace_back(e.what());
      }
    }
    return r;
  }();
  return runs;
}

Outcome model_certification() {
  Outcome o;
  const Runs& runs = pipeline_runs();
  std::size_t checked = 0, non_identity = 0;
  for (std::size_t i = 0; i < runs.instances.size(); ++i) {
    if (!runs.errors[i].empty()) {
      o.fail(runs.instances[i].label + ": " + runs.errors[i]);
      continue;
    }
    const Model& m = runs.reports[i]->model;
    const PointSet& a = runs.instances[i].a;
    if (!is_freiman_iso_linear(m.map, a, 8)) o.fail(runs.instances[i].label + ": kernel meets 16A");
    if (!freiman_tuple_spot_check(m.map, a, 8, 1000, mix_seed(1000 + i))) o.fail(runs.instances[i].label + ": spot check");
    if (doubling_of(m.a_model) != doubling_of(dense_of(a))) o.fail(runs.instances[i].label + ": K not preserved");
    ++checked;
  }
  // Models that really compress: sparse sets of large rank at low order.
  Rng rng(106);
  for (int i = 0; i < 20; ++i) {
    std::vector<Word> pts{0};
    const int r = 14 + static_cast<int>(rng() % 8);
    for (int j = 0; j < r; ++j) pts.push_back(Word{1} << j);
    const PointSet a(40, pts);
    const unsigned s = 2;  // order 2 is the least that preserves |A+A|
    const Model m = find_model(a, s, rng());
    if (!m.identity_on_span) ++non_identity;
    if (!is_freiman_iso_linear(m.map, a, s)) o.fail("compressing model: kernel meets 2sA");
    if (!freiman_tuple_spot_check(m.map, a, s, 1000, rng())) o.fail("compressing model: spot check");
    if (doubling_of(m.a_model) != doubling_constant(a)) o.fail("compressing model: K not preserved");
    ++checked;
  }
  if (o.pass)
    o.detail = std::to_string(checked) + " models (" + std::to_string(non_identity) +
               " compressing), 1000-tuple spot checks, K preserved";
  return o;
}

Outcome pullback() {
  Outcome o;
  const Runs& runs = pipeline_runs();
  for (std::size_t i = 0; i < runs.instances.size(); ++i) {
    if (!runs.errors[i].empty()) {
      o.fail(runs.instances[i].label + ": " + runs.errors[i]);
      continue;
    }
    const PipelineReport& rep = *runs.reports[i];
    const PointSet& a = runs.instances[i].a;
    // Recompute P = {x in 4A : map(x) in W} in ambient coordinates.
    const DenseSet four = oracle::repeated_sumset(dense_of(a), 4);
    std::vector<Word> p;
    four.for_each([&](Word x) {
      if (rep.structure.w.contains(rep.model.map.apply(x))) p.push_back(x);
    });
    const std::size_t w_size = std::size_t{1} << rep.structure.w.rank();
    if (p.size() != w_size) o.fail(runs.instances[i].label + ": |P| != |W|");
    const PointSet ps(a.dim(), p);
    if (affine_span(ps).rank() != rep.structure.w.rank()) o.fail(runs.instances[i].label + ": P is not a coset");
    if (!(affine_span(ps) == rep.pullback)) o.fail(runs.instances[i].label + ": pullback differs from P");
  }
  if (o.pass) o.detail = std::to_string(runs.instances.size()) + " pipeline runs";
  return o;
}

Outcome end_to_end() {
  Outcome o;
  const Runs& runs = pipeline_runs();
  std::size_t extremal = 0, random = 0, subspaces = 0;
  for (std::size_t i = 0; i < runs.instances.size(); ++i) {
    const Instance& in = runs.instances[i];
    if (!runs.errors[i].empty()) {
      o.fail(in.label + ": " + runs.errors[i]);
      continue;
    }
    const PipelineReport& rep = *runs.reports[i];
    for (Word x : in.a.words())
      if (!rep.final_coset.contains(x)) o.fail(in.label + ": final coset misses a point of A");
    if (in.subspace) {
      ++subspaces;
      if (rep.final_ratio != Rational(1)) o.fail(in.label + ": final ratio " + to_string(rep.final_ratio));
    } else if (in.label.rfind("extremal", 0) == 0) {
      ++extremal;
    } else {
      ++random;
    }
  }
  // d = 2, k = 3 against the exhaustive oracles.
  const PointSet ext = gen_extremal(2, 3, 4);
  const DenseSet ed = dense_of(ext);
  const auto ss = oracle::pairwise_sumset(ed, ed).size();
  const auto mc = oracle::min_coset_size_exhaustive(ed);
  const PipelineReport rep = run_pipeline(ext);
  if (ss != 13 || rep.sumset_size != 13) o.fail("extremal d=2 k=3: |A+A| = " + std::to_string(rep.sumset_size));
  if (mc != 16 || rep.min_coset_size != 16) o.fail("extremal d=2 k=3: minimal coset " + std::to_string(rep.min_coset_size));
  if (o.pass)
    o.detail = std::to_string(extremal) + " extremal, " + std::to_string(random) + " random, " +
               std::to_string(subspaces) + " subspace runs; d=2 k=3 gives |A+A| = 13, minimal coset 16";
  return o;
}

Outcome monitored() {
  Outcome o;
  SweepSpec spec;
  spec.family = "extremal";
  spec.d = IntRange::parse("1:5");
  spec.k = IntRange::parse("2:6");
  const SweepResult r = run_sweep(spec);
  std::istringstream lines(r.csv);
  std::string header;
  std::getline(lines, header);
  std::vector<std::string> cols;
  {
    std::stringstream hs(header);
    for (std::string c; std::getline(hs, c, ',');) cols.push_back(c);
  }
  const std::vector<std::string> wanted{"model_vs_K16", "fit_model_exponent", "fit_cover_const", "fit_final_const"};
  std::map<std::string, std::pair<double, double>> range;
  std::map<std::string, int> filled;
  for (const auto& w : wanted) {
    if (std::find(cols.begin(), cols.end(), w) == cols.end()) o.fail("sweep CSV lacks column " + w);
    range[w] = {1e300, -1e300};
  }
  for (std::string line; std::getline(lines, line);) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    for (std::size_t j = 0; j < cols.size() && j < cells.size(); ++j) {
      if (std::find(wanted.begin(), wanted.end(), cols[j]) == wanted.end() || cells[j].empty()) continue;
      const double v = cols[j] == "model_vs_K16" ? to_double(parse_rational(cells[j])) : std::stod(cells[j]);
      ++filled[cols[j]];
      range[cols[j]].first = std::min(range[cols[j]].first, v);
      range[cols[j]].second = std::max(range[cols[j]].second, v);
    }
  }
  if (r.defects != 0) o.fail("sweep reported defects");
  if (o.pass) {
    std::ostringstream d;
    d << r.rows << " sweep rows, reported not asserted:";
    for (const auto& w : wanted) {
      d << ' ' << w << '[' << filled[w] << " rows";
      if (filled[w]) d << ", " << range[w].first << ".." << range[w].second;
      d << ']';
    }
    o.detail = d.str();
  }
  return o;
}

Outcome performance() {
  Outcome o;
  Rng rng(107);
  const int m = 20;
  const std::size_t half = std::size_t{1} << (m - 1);
  auto half_density = [&] {
    std::vector<Word> all(std::size_t{1} << m);
    for (Word v = 0; v < all.size(); ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(half);
    return DenseSet::from_members(m, all);
  };
  const DenseSet x = half_density(), y = half_density();
  auto t = Clock::now();
  const DenseSet s = sumset(x, y);
  const double t_sum = seconds_since(t);
  t = Clock::now();
  const DenseSet sf = sumset_fwht(x, y);
  const double t_fwht_route = seconds_since(t);
  if (!(s == sf)) o.fail("routes disagree");

  std::vector<Wide> v(std::size_t{1} << m);
  x.for_each([&](Word w) { v[w] = 1; });
  t = Clock::now();
  const auto tv = fwht(v);
  const double t_fwht = seconds_since(t);
  if (tv[0] != static_cast<Wide>(half)) o.fail("FWHT T(0) wrong");

  if (t_sum >= 1) o.fail("sumset took " + std::to_string(t_sum) + " s");
  if (t_fwht_route >= 1) o.fail("FWHT sumset route took " + std::to_string(t_fwht_route) + " s");
  if (t_fwht >= 2) o.fail("FWHT took " + std::to_string(t_fwht) + " s");
  if (o.pass)
    o.detail = "sumset " + std::to_string(t_sum) + " s (FWHT route " + std::to_string(t_fwht_route) + " s), FWHT " +
               std::to_string(t_fwht) + " s at m = 20";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact spectral identities", spectral_identities},
      {"sumset triple-path agreement", sumset_paths},
      {"large-coefficient dichotomy", dichotomy},
      {"pure density budget", pure_budget},
      {"doubling budget", doubling_budget_check},
      {"model certification", model_certification},
      {"pullback is a coset of size |W|", pullback},
      {"end to end", end_to_end},
      {"monitored yardsticks", monitored},
      {"performance", performance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
