#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fqdist/error.hpp"
#include "fqdist/experiment.hpp"
#include "fqdist/generate.hpp"
#include "fqdist/io.hpp"
#include "fqdist/lemma_lab.hpp"

namespace {

using namespace fqdist;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::CapExceeded:
    case Errc::PairCapExceeded:
    case Errc::ModulusTooLarge:
    case Errc::RoundingDrift:  // the grid is too large for the float path
      return kExitCap;
    default:
      return kExitUsage;
  }
}

struct CapFlags {
  std::uint64_t grid = Caps::kDefaultGrid;
  std::uint64_t pairs = Caps::kDefaultPairs;
  Caps caps() const { return Caps{grid, pairs}; }
};

void add_cap_flags(CLI::App* cmd, CapFlags& caps) {
  cmd->add_option("--cap-grid", caps.grid, "Largest allowed q^s")->capture_default_str();
  cmd->add_option("--cap-pairs", caps.pairs, "Largest #E*#F for the pair loop")->capture_default_str();
}

// Per-set generator flags, shared by gen and verify.
struct GenFlags {
  std::string kind = "uniform_random";
  std::string size = "1";
  FieldElement radius = 0;
  int dim = 1;
  std::uint32_t length = 1;
  std::string file;

  GeneratorSpec spec(std::uint64_t grid_size, std::string_view what) const {
    GeneratorSpec out;
    auto k = parse_generator(kind);
    if (!k) throw Error(Errc::ConfigError, std::string(what) + ": unknown generator '" + kind + "'");
    out.kind = *k;
    auto sz = SizeSpec::parse(size);
    if (!sz) throw Error(Errc::ConfigError, std::string(what) + ": bad size '" + size + "'");
    out.size = sz->resolve(grid_size);
    out.radius = radius;
    out.dim = dim;
    out.length = length;
    out.path = file;
    if (out.kind == GeneratorKind::FromFile && file.empty()) {
      throw Error(Errc::ConfigError, std::string(what) + ": from_file needs a file");
    }
    return out;
  }
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(Errc::IoError, "write failed for " + path);
}

std::string render(const RunResult& result, const std::string& format) {
  return format == "json" ? to_jsonl(result) : to_csv(result);
}

std::uint64_t grid_size(std::int64_t q, int s, const Caps& caps) {
  FieldContext ctx(q);
  return Shape::make(ctx.q(), s, caps.grid).size;
}

// Quick internal consistency pass over small fields.
int selftest() {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
    failures += !ok;
  };
  for (std::int64_t q : {3, 5, 7, 13}) {
    FieldContext ctx(q);
    for (int s : {2, 3}) {
      const std::string cell = " q=" + std::to_string(q) + " s=" + std::to_string(s);
      report("zoff" + cell, check_zoff(ctx, s).explicit_pass.value_or(false));
      const std::uint64_t n = Shape::make(ctx.q(), s).size;
      PointSet e = generate(ctx, s, GeneratorSpec::uniform_random(n / 3 + 1, 1));
      PointSet f = generate(ctx, s, GeneratorSpec::uniform_random(n / 4 + 1, 2));
      PairAnalysis pair = analyze_pair(ctx, e, f);
      for (LemmaId id : {LemmaId::Insel, LemmaId::Rollei, LemmaId::Fueller, LemmaId::Karte,
                         LemmaId::Von1717}) {
        report(std::string(lemma_name(id)) + cell, run_check(id, pair).explicit_pass.value_or(false));
      }
    }
  }
  std::cout << (failures == 0 ? "selftest ok" : "selftest failed") << '\n';
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance distributions and spectral identities over F_q^s"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a point set and write it in text format");
  std::int64_t gen_q = 0;
  int gen_s = 2;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  GenFlags gen_flags;
  CapFlags gen_caps;
  gen->add_option("--q", gen_q, "Odd prime modulus")->required();
  gen->add_option("--s", gen_s, "Dimension")->capture_default_str();
  gen->add_option("--kind", gen_flags.kind,
                  "uniform_random, isotropic_line, sphere_set, subspace, product_interval, from_file")
      ->capture_default_str();
  gen->add_option("--size", gen_flags.size, "Size, absolute or a fraction of q^s")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Seed")->capture_default_str();
  gen->add_option("--radius", gen_flags.radius, "sphere_set radius");
  gen->add_option("--dim", gen_flags.dim, "subspace dimension");
  gen->add_option("--length", gen_flags.length, "product_interval side length");
  gen->add_option("--file", gen_flags.file, "from_file input path");
  gen->add_option("--out", gen_out, "Output path (default stdout)");
  add_cap_flags(gen, gen_caps);

  // verify
  auto* verify = app.add_subcommand("verify", "Run lemma checkers on generated pairs");
  VerifyConfig vcfg;
  GenFlags ve, vf;
  std::string v_lemma = "all", v_format = "csv", v_out;
  CapFlags v_caps;
  ve.size = vf.size = "0.25";
  verify->add_option("--q", vcfg.q, "Odd prime modulus")->required();
  verify->add_option("--s", vcfg.s, "Dimension")->capture_default_str();
  verify->add_option("--sizeE", ve.size, "#E, absolute or a fraction of q^s")->capture_default_str();
  verify->add_option("--sizeF", vf.size, "#F, absolute or a fraction of q^s")->capture_default_str();
  verify->add_option("--kindE", ve.kind, "Generator for E")->capture_default_str();
  verify->add_option("--kindF", vf.kind, "Generator for F")->capture_default_str();
  verify->add_option("--fileE", ve.file, "Point-set file for E (from_file)");
  verify->add_option("--fileF", vf.file, "Point-set file for F (from_file)");
  verify->add_option("--radius", ve.radius, "sphere_set radius (both sets)");
  verify->add_option("--dim", ve.dim, "subspace dimension (both sets)");
  verify->add_option("--length", ve.length, "product_interval length (both sets)");
  verify->add_option("--trials", vcfg.trials, "Trials")->capture_default_str();
  verify->add_option("--seed", vcfg.seed, "Master seed")->capture_default_str();
  verify->add_option("--lemma", v_lemma, "Comma-separated lemma names, or all")->capture_default_str();
  verify->add_option("--format", v_format, "Output format")->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  verify->add_option("--out", v_out, "Output path (default stdout)");
  add_cap_flags(verify, v_caps);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run a grid of (q, s, sizes, trials) and write CSV");
  std::string sw_config, sw_q, sw_s, sw_e, sw_f, sw_lemma, sw_format = "csv", sw_out;
  std::optional<std::uint32_t> sw_trials;
  std::optional<std::uint64_t> sw_seed, sw_cap_grid, sw_cap_pairs;
  sweep->add_option("--config", sw_config, "Config file of 'key = value' lines");
  sweep->add_option("--q", sw_q, "Comma-separated moduli");
  sweep->add_option("--s", sw_s, "Comma-separated dimensions");
  sweep->add_option("--sizeE", sw_e, "Comma-separated #E values or fractions");
  sweep->add_option("--sizeF", sw_f, "Comma-separated #F values or fractions");
  sweep->add_option("--trials", sw_trials, "Trials per cell");
  sweep->add_option("--seed", sw_seed, "Master seed");
  sweep->add_option("--lemma", sw_lemma, "Comma-separated lemma names, or all");
  sweep->add_option("--format", sw_format, "Output format")->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep->add_option("--out", sw_out, "Output path (default stdout)");
  sweep->add_option("--cap-grid", sw_cap_grid, "Largest allowed q^s");
  sweep->add_option("--cap-pairs", sw_cap_pairs, "Largest #E*#F for the pair loop");

  // bench
  auto* bench = app.add_subcommand("bench", "Time the pair loop against the spectral path");
  BenchConfig bcfg;
  std::string b_out;
  CapFlags b_caps;
  bench->add_option("--q", bcfg.q, "Odd prime modulus")->capture_default_str();
  bench->add_option("--s", bcfg.s, "Dimension")->capture_default_str();
  bench->add_option("--sizeE", bcfg.size_e, "#E")->capture_default_str();
  bench->add_option("--sizeF", bcfg.size_f, "#F")->capture_default_str();
  bench->add_option("--reps", bcfg.repetitions, "Repetitions")->capture_default_str();
  bench->add_option("--seed", bcfg.seed, "Seed")->capture_default_str();
  bench->add_option("--out", b_out, "Output path (default stdout)");
  add_cap_flags(bench, b_caps);

  app.add_subcommand("selftest", "Run a short internal consistency pass");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      Caps caps = gen_caps.caps();
      FieldContext ctx(gen_q);
      GeneratorSpec spec = gen_flags.spec(grid_size(gen_q, gen_s, caps), "gen");
      spec.seed = gen_seed;
      emit(format_pointset(generate(ctx, gen_s, spec)), gen_out);
      return kExitOk;
    }
    if (*verify) {
      vcfg.caps = v_caps.caps();
      const std::uint64_t n = grid_size(vcfg.q, vcfg.s, vcfg.caps);
      vf.radius = ve.radius;
      vf.dim = ve.dim;
      vf.length = ve.length;
      vcfg.gen_e = ve.spec(n, "E");
      vcfg.gen_f = vf.spec(n, "F");
      vcfg.lemmas = parse_lemma_list(v_lemma, "lemma");
      RunResult result = run_verify(vcfg);
      emit(render(result, v_format), v_out);
      return result.any_explicit_failure() ? kExitCheckFailed : kExitOk;
    }
    if (*sweep) {
      SweepConfig cfg;
      if (!sw_config.empty()) {
        std::ifstream in(sw_config, std::ios::binary);
        if (!in) throw Error(Errc::IoError, "cannot read " + sw_config);
        std::stringstream buf;
        buf << in.rdbuf();
        cfg = parse_sweep_config(buf.str());
      } else {
        cfg.lemmas = all_lemmas();
      }
      // Flags override the config file.
      if (!sw_q.empty()) cfg.q_list = parse_int_list(sw_q, "q");
      if (!sw_s.empty()) {
        cfg.s_list.clear();
        for (auto v : parse_int_list(sw_s, "s")) cfg.s_list.push_back(static_cast<int>(v));
      }
      if (!sw_e.empty()) cfg.sizes_e = parse_size_list(sw_e, "sizeE");
      if (!sw_f.empty()) cfg.sizes_f = parse_size_list(sw_f, "sizeF");
      if (!sw_lemma.empty()) cfg.lemmas = parse_lemma_list(sw_lemma, "lemma");
      if (sw_trials) cfg.trials = *sw_trials;
      if (sw_seed) cfg.seed = *sw_seed;
      if (sw_cap_grid) cfg.caps.grid = *sw_cap_grid;
      if (sw_cap_pairs) cfg.caps.pairs = *sw_cap_pairs;
      if (!sw_out.empty()) cfg.output_path = sw_out;
      validate(cfg);
      RunResult result = run_sweep(cfg);
      emit(render(result, sw_format), cfg.output_path);
      return result.any_explicit_failure() ? kExitCheckFailed : kExitOk;
    }
    if (*bench) {
      bcfg.caps = b_caps.caps();
      BenchReport rep = run_bench(bcfg);
      emit(bench_to_json(rep) + "\n", b_out);
      const bool ok = rep.mass_ok && rep.match.value_or(true);
      return ok ? kExitOk : kExitCheckFailed;
    }
    return selftest();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
