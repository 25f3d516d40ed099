#include "freiman/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "freiman/errors.hpp"
#include "freiman/generators.hpp"
#include "freiman/pipeline.hpp"

namespace freiman {

namespace {

struct Instance {
  std::int64_t d = -1, k = -1, n = -1, size = -1;
  std::uint64_t seed = 0;
};

std::string fit_cell(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", *v);
  return buf;
}

std::string cell(std::int64_t v) { return v < 0 ? "" : std::to_string(v); }

std::vector<Instance> enumerate(const SweepSpec& spec) {
  std::vector<Instance> out;
  if (spec.family == "extremal") {
    for (auto d = spec.d.lo; d <= spec.d.hi; ++d)
      for (auto k = spec.k.lo; k <= spec.k.hi; ++k) {
        if (spec.n.empty()) {
          out.push_back({d, k, std::max<std::int64_t>(d + k - 1, 1), -1, spec.seed});
        } else {
          for (auto n = spec.n.lo; n <= spec.n.hi; ++n) out.push_back({d, k, n, -1, spec.seed});
        }
      }
  } else if (spec.family == "subspace") {
    for (auto d = spec.d.lo; d <= spec.d.hi; ++d) {
      if (spec.n.empty()) {
        out.push_back({d, -1, std::max<std::int64_t>(d, 1), -1, spec.seed});
      } else {
        for (auto n = spec.n.lo; n <= spec.n.hi; ++n) out.push_back({d, -1, n, -1, spec.seed});
      }
    }
  } else if (spec.family == "random") {
    std::uint64_t index = 0;
    for (auto n = spec.n.lo; n <= spec.n.hi; ++n)
      for (auto sz = spec.size.lo; sz <= spec.size.hi; ++sz)
        for (unsigned c = 0; c < spec.count; ++c)
          out.push_back({-1, -1, n, sz, mix_seed(spec.seed ^ mix_seed(index++))});
  } else {
    throw InvalidArgument("unknown family '" + spec.family + "' (expected extremal, random or subspace)");
  }
  return out;
}

PointSet generate(const SweepSpec& spec, const Instance& in) {
  if (spec.family == "extremal") return gen_extremal(static_cast<int>(in.d), static_cast<int>(in.k), static_cast<int>(in.n));
  if (spec.family == "subspace") return gen_subspace(static_cast<int>(in.d), static_cast<int>(in.n));
  return gen_random(static_cast<int>(in.n), static_cast<std::uint64_t>(in.size), in.seed);
}

struct Row {
  std::string text;
  bool defect = false;
  bool error = false;
};

Row run_instance(const SweepSpec& spec, const Instance& in, std::size_t index) {
  std::vector<std::string> cells = {std::to_string(index), spec.family, cell(in.d), cell(in.k),
                                    cell(in.n), cell(in.size), std::to_string(in.seed)};
  Row row;
  std::string status = "ok";
  std::vector<std::string> values(sweep_columns(spec.timings).size() - cells.size() - 1);
  try {
    const PointSet a = generate(spec, in);
    PipelineConfig cfg;
    cfg.s = spec.s;
    cfg.seed = in.seed;
    cfg.dense_limit = spec.dense_limit;
    cfg.timings = spec.timings;
    const PipelineReport r = run_pipeline(a, cfg);
    std::string rounds;
    for (std::size_t i = 0; i < r.cover.round_sizes.size(); ++i)
      rounds += (i ? ";" : "") + std::to_string(r.cover.round_sizes[i]);
    std::string displayed;
    if (spec.family == "extremal") {
      // k (2^d + (k-1)/2), the closed form quoted for this family
      displayed = to_string(Rational(in.k) * (Rational(pow2(static_cast<unsigned>(in.d))) + Rational(in.k - 1, 2)));
    }
    values = {std::to_string(r.set_size),
              std::to_string(r.sumset_size),
              to_string(r.doubling),
              std::to_string(r.span_rank),
              std::to_string(r.model.model_dim),
              std::to_string(r.model.retries),
              r.model.identity_on_span ? "1" : "0",
              std::to_string(r.structure.codim),
              std::to_string(r.structure.bound_budget),
              std::to_string(std::uint64_t{1} << r.pullback.rank()),
              to_string(r.cover.eta),
              std::to_string(r.cover.overhead),
              rounds,
              to_string(r.final_ratio),
              std::to_string(r.min_coset_size),
              to_string(r.model_vs_k16),
              fit_cell(r.fit_model_exponent),
              fit_cell(r.fit_cover_const),
              fit_cell(r.fit_final_const),
              displayed};
    if (spec.timings) {
      values.push_back(fit_cell(r.times.model_ms));
      values.push_back(fit_cell(r.times.structure_ms));
      values.push_back(fit_cell(r.times.pullback_ms));
      values.push_back(fit_cell(r.times.cover_ms));
    }
  } catch (const DefectError&) {
    status = "defect";
    row.defect = true;
  } catch (const Error&) {
    status = "error";
    row.error = true;
  }
  cells.insert(cells.end(), values.begin(), values.end());
  cells.push_back(status);
  for (std::size_t i = 0; i < cells.size(); ++i) row.text += (i ? "," : "") + cells[i];
  row.text += '\n';
  return row;
}

}  // namespace

IntRange IntRange::parse(const std::string& text) {
  try {
    const auto colon = text.find(':');
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const auto v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
    IntRange r{std::stoll(lo, &used), 0};
    if (used != lo.size()) throw std::invalid_argument(text);
    r.hi = std::stoll(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    return r;
  } catch (const std::logic_error&) {
    throw InvalidArgument("malformed range '" + text + "' (expected lo:hi)");
  }
}

std::vector<std::string> sweep_columns(bool timings) {
  std::vector<std::string> cols = {"index",         "family",        "d",
                                   "k",             "n",             "size",
                                   "seed",          "A_size",        "sumset_size",
                                   "K",             "span_rank",     "model_dim",
                                   "model_retries", "model_identity", "codim",
                                   "bound_budget",  "pullback_size", "eta",
                                   "cover_overhead", "cover_rounds", "final_ratio",
                                   "min_coset_size", "model_vs_K16", "fit_model_exponent",
                                   "fit_cover_const", "fit_final_const", "extremal_sumset_displayed"};
  if (timings) {
    for (const char* c : {"t_model_ms", "t_structure_ms", "t_pullback_ms", "t_cover_ms"}) cols.emplace_back(c);
  }
  cols.emplace_back("status");
  return cols;
}

SweepResult run_sweep(const SweepSpec& spec) {
  const std::vector<Instance> instances = enumerate(spec);
  std::vector<Row> rows(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) rows[i] = run_instance(spec, instances[i], i);
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(spec.jobs, static_cast<unsigned>(instances.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  SweepResult out;
  const auto cols = sweep_columns(spec.timings);
  for (std::size_t i = 0; i < cols.size(); ++i) out.csv += (i ? "," : "") + cols[i];
  out.csv += '\n';
  for (const Row& r : rows) {
    out.csv += r.text;
    out.defects += r.defect;
    out.errors += r.error;
  }
  out.rows = rows.size();
  return out;
}

}  // namespace freiman
