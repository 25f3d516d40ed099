// freiman: command-line front end.
//
//   freiman gen extremal --d 2 --k 3 --out a.set
//   freiman analyze a.set
//   freiman pipeline a.set --seed 7 --log
//   freiman sweep --family extremal --d 3 --k 2:8 --out ramp.csv
//   freiman selftest --corpus data/corpus
//
// Exit codes: 0 success, 1 usage or input error, 2 certificate violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "freiman/errors.hpp"
#include "freiman/generators.hpp"
#include "freiman/pipeline.hpp"
#include "freiman/report_json.hpp"
#include "freiman/selftest.hpp"
#include "freiman/set_io.hpp"
#include "freiman/sweep.hpp"

namespace {

struct Common {
  std::uint64_t seed = 0;
  int dense_limit = freiman::kDefaultDenseLimit;
  std::string out;
  std::string format;
};

void add_common(CLI::App* cmd, Common& c, std::vector<std::string> formats, std::string default_format) {
  cmd->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--dense-limit", c.dense_limit, "Largest dimension handled as a dense bit-vector")
      ->check(CLI::Range(0, freiman::kDenseHardCap))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Output file (default: stdout)");
  c.format = default_format;
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw freiman::InvalidArgument("cannot write " + c.out);
  f << text;
}

std::vector<freiman::PointSet> load_corpus(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".set") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<freiman::PointSet> sets;
  for (const auto& f : files) sets.push_back(freiman::read_set_file(f.string()));
  return sets;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructive Freiman pipeline over F_2"};
  app.require_subcommand(1);

  // gen
  Common gen_opts;
  std::string family;
  int d = 0, k = 1, n = -1;
  std::uint64_t size = 0;
  auto* gen = app.add_subcommand("gen", "Generate an instance as a set file");
  gen->add_option("family", family, "extremal | random | subspace")
      ->required()
      ->check(CLI::IsMember({"extremal", "random", "subspace"}));
  gen->add_option("--d", d, "Subgroup dimension (extremal, subspace)");
  gen->add_option("--k", k, "Number of cosets (extremal)");
  gen->add_option("--n", n, "Ambient dimension");
  gen->add_option("--size", size, "Number of points (random)");
  add_common(gen, gen_opts, {"set"}, "set");

  // analyze
  Common analyze_opts;
  std::string analyze_input;
  auto* analyze = app.add_subcommand("analyze", "Doubling constant and spectrum summary");
  analyze->add_option("input", analyze_input, "Set file")->required();
  add_common(analyze, analyze_opts, {"json"}, "json");

  // pipeline
  Common pipe_opts;
  std::string pipe_input;
  unsigned order = freiman::kDefaultModelOrder;
  bool timings = false, log = false;
  auto* pipeline = app.add_subcommand("pipeline", "Run model, structure, pullback and covering");
  pipeline->add_option("input", pipe_input, "Set file")->required();
  pipeline->add_option("--order", order, "Freiman order s of the model")->capture_default_str();
  pipeline->add_flag("--timings", timings, "Include wall times (output no longer deterministic)");
  pipeline->add_flag("--log", log, "Structured per-stage log on stderr");
  add_common(pipeline, pipe_opts, {"json"}, "json");

  // sweep
  Common sweep_opts;
  freiman::SweepSpec spec;
  std::string d_range = "0", k_range = "1", n_range = "0:-1", size_range = "0:-1";
  bool sweep_timings = false;
  auto* sweep = app.add_subcommand("sweep", "Run the pipeline over a family of instances");
  sweep->add_option("--family", spec.family, "extremal | random | subspace")
      ->check(CLI::IsMember({"extremal", "random", "subspace"}))
      ->capture_default_str();
  sweep->add_option("--d", d_range, "Range lo:hi")->capture_default_str();
  sweep->add_option("--k", k_range, "Range lo:hi")->capture_default_str();
  sweep->add_option("--n", n_range, "Range lo:hi (empty: smallest fitting)");
  sweep->add_option("--size", size_range, "Range lo:hi (random family)");
  sweep->add_option("--count", spec.count, "Random instances per (n, size)")->capture_default_str();
  sweep->add_option("--order", spec.s, "Freiman order s of the model")->capture_default_str();
  sweep->add_option("--jobs", spec.jobs, "Worker threads")->capture_default_str();
  sweep->add_flag("--timings", sweep_timings, "Add stage time columns (output no longer deterministic)");
  add_common(sweep, sweep_opts, {"csv"}, "csv");

  // selftest
  Common self_opts;
  std::string corpus_dir;
  auto* self = app.add_subcommand("selftest", "Run the invariant suite");
  self->add_option("--corpus", corpus_dir, "Directory of .set files to run end to end");
  add_common(self, self_opts, {"text", "json"}, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*gen) {
      freiman::PointSet a(1);
      if (family == "extremal") a = freiman::gen_extremal(d, k, n < 0 ? std::max(d + k - 1, 1) : n);
      else if (family == "subspace") a = freiman::gen_subspace(d, n < 0 ? std::max(d, 1) : n);
      else a = freiman::gen_random(n < 0 ? 8 : n, size, gen_opts.seed);
      std::ostringstream os;
      freiman::write_set(os, a);
      emit(gen_opts, os.str());
    } else if (*analyze) {
      const auto a = freiman::read_set_file(analyze_input);
      emit(analyze_opts, freiman::analyze(a, analyze_opts.dense_limit).dump(2) + "\n");
    } else if (*pipeline) {
      const auto a = freiman::read_set_file(pipe_input);
      freiman::PipelineConfig cfg;
      cfg.s = order;
      cfg.seed = pipe_opts.seed;
      cfg.dense_limit = pipe_opts.dense_limit;
      cfg.timings = timings;
      cfg.log = log ? &std::cerr : nullptr;
      emit(pipe_opts, freiman::to_json(freiman::run_pipeline(a, cfg)).dump(2) + "\n");
    } else if (*sweep) {
      spec.d = freiman::IntRange::parse(d_range);
      spec.k = freiman::IntRange::parse(k_range);
      spec.n = freiman::IntRange::parse(n_range);
      spec.size = freiman::IntRange::parse(size_range);
      spec.seed = sweep_opts.seed;
      spec.dense_limit = sweep_opts.dense_limit;
      spec.timings = sweep_timings;
      const auto result = freiman::run_sweep(spec);
      emit(sweep_opts, result.csv);
      if (result.defects) return 2;
    } else if (*self) {
      const auto corpus = corpus_dir.empty() ? std::vector<freiman::PointSet>{} : load_corpus(corpus_dir);
      const auto results = freiman::selftest(self_opts.seed, corpus);
      bool all = true;
      std::ostringstream os;
      freiman::Json j = freiman::Json::array();
      for (const auto& r : results) {
        all = all && r.pass;
        os << (r.pass ? "PASS " : "FAIL ") << r.name << (r.pass ? "" : ": " + r.detail) << '\n';
        j.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      }
      os << (all ? "all checks passed" : "some checks failed") << '\n';
      emit(self_opts, self_opts.format == "json" ? j.dump(2) + "\n" : os.str());
      if (!all) return 2;
    }
  } catch (const freiman::DefectError& e) {
    std::cerr << "defect: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
