#include "freiman/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "json.hpp"

#include "freiman/errors.hpp"

namespace freiman {

namespace {

template <class F>
auto run_stage(const char* stage, double& ms, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  try {
    auto out = f();
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
  } catch (const DefectError& e) {
    throw DefectError(std::string("stage ") + stage + ": " + e.what());
  } catch (const InstanceTooLarge& e) {
    throw InstanceTooLarge(std::string("stage ") + stage + ": " + e.what());
  } catch (const Error& e) {
    throw Error(std::string("stage ") + stage + ": " + e.what());
  }
}

void log_stage(const PipelineConfig& cfg, nlohmann::ordered_json entry, double ms) {
  if (!cfg.log) return;
  if (cfg.timings) entry["ms"] = ms;
  *cfg.log << entry.dump() << '\n';
}

double log2_of(const Rational& r) {
  return std::log2(numerator(r).convert_to<double>()) - std::log2(denominator(r).convert_to<double>());
}

double round6(double v) { return std::round(v * 1e6) / 1e6; }

}  // namespace

PipelineReport run_pipeline(const PointSet& a, const PipelineConfig& cfg) {
  if (a.empty()) throw InvalidArgument("pipeline needs a nonempty set");
  StageTimes times;
  double prep_ms = 0;
  auto compressed = run_stage("prepare", prep_ms, [&] { return compress(a, cfg.dense_limit); });
  const DenseSet doubled = sumset(compressed.set, compressed.set);
  const Rational k(BigInt(doubled.size()), BigInt(a.size()));
  log_stage(cfg, {{"stage", "prepare"}, {"size", a.size()}, {"span_rank", compressed.span.rank()},
                  {"doubling", to_string(k)}}, prep_ms);

  Model model = run_stage("model", times.model_ms, [&] { return find_model(a, cfg.s, cfg.seed, cfg.dense_limit); });
  FREIMAN_ENSURE(doubling_constant(model.a_model) == k, "model does not preserve the doubling constant");
  log_stage(cfg, {{"stage", "model"}, {"model_dim", model.model_dim}, {"retries", model.retries},
                  {"identity_on_span", model.identity_on_span}, {"certificate", model.certificate}}, times.model_ms);

  StructureResult structure =
      run_stage("structure", times.structure_ms, [&] { return doubling_subspace(model.a_model); });
  log_stage(cfg, {{"stage", "structure"}, {"codim", structure.codim}, {"bound_budget", structure.bound_budget},
                  {"steps", structure.trace.size()}}, times.structure_ms);

  Coset pullback = run_stage("pullback", times.pullback_ms,
                             [&] { return pullback_coset(model, structure.w, cfg.dense_limit); });
  log_stage(cfg, {{"stage", "pullback"}, {"rank", pullback.rank()}}, times.pullback_ms);

  CoverReport cover = run_stage("cover", times.cover_ms, [&] {
    // Q in span coordinates: P ⊆ 4A ⊆ span{a + a0}, where gathering is injective.
    Subspace q_sub(compressed.span.rank());
    for (Word r : pullback.subspace().basis()) q_sub.insert(compressed.span.coordinates(r));
    const Coset q(compressed.span.coordinates(pullback.rep()), std::move(q_sub));
    return chang_cover(compressed.set, q);
  });

  // Back to ambient coordinates.
  const Embedding& emb = compressed.embedding;
  Coset final_coset(emb.apply(cover.output.rep()), emb.image(cover.output.subspace()));
  bool contains = true;
  for (Word p : a.words()) contains = contains && final_coset.contains(p);
  FREIMAN_ENSURE(contains, "final coset does not contain A");
  log_stage(cfg, {{"stage", "cover"}, {"overhead", cover.overhead}, {"rounds", cover.round_sizes},
                  {"final_rank", final_coset.rank()}, {"contains_A", contains}}, times.cover_ms);

  PipelineReport rep{a.size(), a.dim(), compressed.span.rank(), doubled.size(), k, std::uint64_t{1} << compressed.span.rank(),
                     std::move(model), std::move(structure), std::move(pullback), std::move(cover),
                     std::move(final_coset)};
  rep.final_ratio = Rational(pow2(rep.final_coset.rank()), BigInt(a.size()));
  rep.contains_a = contains;

  const BigInt model_size = pow2(rep.model.model_dim);
  rep.model_density = Rational(BigInt(a.size()), model_size);
  Rational k16 = 1;
  for (int i = 0; i < 16; ++i) k16 *= k;
  rep.model_vs_k16 = Rational(model_size) / (k16 * BigInt(a.size()));
  rep.density_at_least_k_minus16 = rep.model_density * k16 >= 1;

  const double log_k = log2_of(k);
  if (k > 1) {
    rep.fit_model_exponent = round6(log2_of(Rational(model_size, BigInt(a.size()))) / log_k);
    rep.fit_final_const = round6(log2_of(rep.final_ratio) / (std::pow(to_double(k), 1.5) * log_k));
  }
  const double cover_scale = to_double(k) * log2_of(k / rep.cover.eta);
  if (cover_scale > 0) rep.fit_cover_const = round6(rep.cover.overhead / cover_scale);

  rep.times = cfg.timings ? times : StageTimes{};
  rep.certificates_ok = rep.model.certificate && rep.contains_a;
  return rep;
}

}  // namespace freiman
