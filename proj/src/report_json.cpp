#include "freiman/report_json.hpp"

#include "freiman/spectral.hpp"

namespace freiman {

namespace {

Json hex_list(std::span<const Word> words) {
  Json out = Json::array();
  for (Word w : words) out.push_back(to_hex(w));
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, Rational>)
    return to_string(*v);
  else
    return *v;
}

Json spectrum_summary(const DenseSet& x, const Rational& doubling) {
  Json out;
  out["dim"] = x.dim();
  const Rational alpha = x.density();
  out["alpha"] = to_string(alpha);
  if (x.dim() == 0) {
    out["max_nontrivial"] = nullptr;
    out["large_spectrum"] = {{"alpha_three_halves", 1}, {"linear_bias", 1}};
    return out;
  }
  const Spectrum spectrum = fourier_indicator(x);
  const PeakCharacter peak = max_nontrivial(spectrum);
  const std::string unit = std::to_string(std::uint64_t{1} << x.dim());
  out["max_nontrivial"] = {{"gamma", to_hex(peak.gamma)},
                           {"coefficient", std::to_string(peak.coefficient) + "/" + unit},
                           {"magnitude", to_string(Rational(BigInt(peak.magnitude), pow2(x.dim())))}};
  // θ = α^{3/2} and θ = (2K)^{-1/2} α, passed squared.
  out["large_spectrum"] = {
      {"alpha_three_halves", large_spectrum_squared(spectrum, alpha * alpha * alpha).size()},
      {"linear_bias", large_spectrum_squared(spectrum, alpha * alpha / (2 * doubling)).size()}};
  return out;
}

}  // namespace

Json to_json(const Subspace& s) {
  return {{"ambient_dim", s.ambient_dim()}, {"rank", s.rank()}, {"basis", hex_list(s.basis())}};
}

Json to_json(const Coset& c) { return {{"rep", to_hex(c.rep())}, {"subspace", to_json(c.subspace())}}; }

Json to_json(const Embedding& e) {
  return {{"in_dim", e.in_dim()},
          {"out_dim", e.out_dim()},
          {"columns", hex_list(e.linear().columns())},
          {"offset", to_hex(e.offset())}};
}

Json to_json(const StepRecord& r) {
  Json j;
  j["step"] = r.step;
  j["local_dim"] = r.local_dim;
  j["gamma"] = to_hex(r.gamma);
  j["coefficient"] = r.coefficient;
  j["side_a"] = r.side_a;
  j["side_b"] = optional_json(r.side_b);
  j["alpha_before"] = to_string(r.alpha_before);
  j["alpha_after"] = to_string(r.alpha_after);
  j["beta_before"] = optional_json(r.beta_before);
  j["beta_after"] = optional_json(r.beta_after);
  j["embedding"] = to_json(r.embedding);
  j["x"] = to_hex(r.x);
  j["y"] = to_hex(r.y);
  return j;
}

Json trace_to_json(const std::vector<StepRecord>& trace) {
  Json out = Json::array();
  for (const auto& r : trace) out.push_back(to_json(r));
  return out;
}

Json to_json(const StructureResult& r) {
  return {{"codim", r.codim},
          {"bound_budget", r.bound_budget},
          {"alpha", to_string(r.alpha)},
          {"doubling", to_string(r.doubling)},
          {"subspace", to_json(r.w)},
          {"trace", trace_to_json(r.trace)},
          {"terminal_trace", trace_to_json(r.terminal_trace)}};
}

Json to_json(const Model& m) {
  return {{"source_dim", m.source_dim},
          {"model_dim", m.model_dim},
          {"order", m.s},
          {"span_rank", m.span_rank},
          {"sumset_size", m.sumset_size},
          {"initial_model_dim", m.initial_model_dim},
          {"retries", m.retries},
          {"identity_on_span", m.identity_on_span},
          {"certificate", m.certificate},
          {"map_columns", hex_list(m.map.columns())}};
}

Json to_json(const CoverReport& r) {
  return {{"eta", to_string(r.eta)},
          {"overhead", r.overhead},
          {"round_sizes", r.round_sizes},
          {"input", to_json(r.input)},
          {"output", to_json(r.output)},
          {"final_ratio", to_string(r.final_ratio)}};
}

Json to_json(const PipelineReport& r) {
  Json j;
  j["size"] = r.set_size;
  j["ambient_dim"] = r.ambient_dim;
  j["span_rank"] = r.span_rank;
  j["sumset_size"] = r.sumset_size;
  j["doubling"] = to_string(r.doubling);
  j["min_coset_size"] = r.min_coset_size;
  j["model"] = to_json(r.model);
  j["structure"] = to_json(r.structure);
  j["pullback"] = {{"coset", to_json(r.pullback)}, {"size", std::uint64_t{1} << r.pullback.rank()}};
  j["cover"] = to_json(r.cover);
  j["final_coset"] = to_json(r.final_coset);
  j["final_ratio"] = to_string(r.final_ratio);
  j["contains_A"] = r.contains_a;
  j["yardsticks"] = {{"model_density", to_string(r.model_density)},
                     {"model_vs_K16", to_string(r.model_vs_k16)},
                     {"density_at_least_K_minus16", r.density_at_least_k_minus16},
                     {"fit_model_exponent", optional_json(r.fit_model_exponent)},
                     {"fit_cover_const", optional_json(r.fit_cover_const)},
                     {"fit_final_const", optional_json(r.fit_final_const)}};
  j["times_ms"] = {{"model", r.times.model_ms},
                   {"structure", r.times.structure_ms},
                   {"pullback", r.times.pullback_ms},
                   {"cover", r.times.cover_ms}};
  j["certificates_ok"] = r.certificates_ok;
  return j;
}

Json analyze(const PointSet& a, int dense_limit) {
  const Compressed c = compress(a, dense_limit);
  const DenseSet doubled = sumset(c.set, c.set);
  const Rational k(BigInt(doubled.size()), BigInt(a.size()));
  Json j;
  j["size"] = a.size();
  j["ambient_dim"] = a.dim();
  j["span_rank"] = c.span.rank();
  j["sumset_size"] = doubled.size();
  j["doubling"] = to_string(k);
  j["span"] = spectrum_summary(c.set, k);
  if (a.dim() <= dense_limit)
    j["ambient"] = spectrum_summary(DenseSet::from_members(a.dim(), a.words()), k);
  else
    j["ambient"] = nullptr;
  return j;
}

}  // namespace freiman
