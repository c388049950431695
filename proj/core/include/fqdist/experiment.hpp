#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fqdist/generate.hpp"
#include "fqdist/grid.hpp"
#include "fqdist/lemma_lab.hpp"

namespace fqdist {

// A set size, absolute ("40") or relative to q^s ("0.25", strictly
// between 0 and 1, rounded to nearest and at least 1).
struct SizeSpec {
  bool fractional = false;
  double fraction = 0.0;
  std::uint64_t absolute = 0;

  static std::optional<SizeSpec> parse(std::string_view text);
  std::uint64_t resolve(std::uint64_t grid_size) const;
  std::string str() const;
};

struct SweepConfig {
  std::vector<std::int64_t> q_list;
  std::vector<int> s_list;
  std::vector<SizeSpec> sizes_e;  // zipped with sizes_f; a single entry broadcasts
  std::vector<SizeSpec> sizes_f;
  std::uint32_t trials = 1;
  std::uint64_t seed = 0;
  std::vector<LemmaId> lemmas;
  std::string output_path;
  Caps caps;
};

// `key = value` lines; '#' starts a comment. Keys: q, s, sizeE, sizeF,
// trials, seed, lemma, out, cap_grid, cap_pairs. Lists are comma separated.
// Throws ConfigError naming the line and field.
SweepConfig parse_sweep_config(std::string_view text);

// Throws ConfigError naming the offending entry (e.g. "q[1] = 4: ...").
void validate(const SweepConfig& config);

// Parsers shared by the config file and the CLI; throw ConfigError naming `field`.
std::vector<std::int64_t> parse_int_list(std::string_view text, std::string_view field);
std::vector<SizeSpec> parse_size_list(std::string_view text, std::string_view field);
std::vector<LemmaId> parse_lemma_list(std::string_view text, std::string_view field);

struct ResultRow {
  LemmaId lemma{};
  std::uint32_t q = 0;
  int s = 0;
  std::uint64_t size_e = 0;
  std::uint64_t size_f = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  LemmaReport report;
};

struct RunResult {
  std::vector<ResultRow> rows;
  bool any_explicit_failure() const noexcept;
};

inline constexpr std::string_view kCsvHeader =
    "lemma_id,q,s,sizeE,sizeF,trial,seed,hypothesis_met,lhs,explicit_pass,measured_constant";

std::string to_csv(const RunResult& result);
// One object per row: the row context plus the report under "report".
std::string to_jsonl(const RunResult& result);

// Rows come out ordered by q, s, size pair, trial, lemma. zoff is emitted
// once per (q, s) with trial 0 and sizes 0; montblanc is skipped for odd s.
// Uniform random sets are drawn with trial_seed(seed, q, s, trial, 'E'/'F').
RunResult run_sweep(const SweepConfig& config);

struct VerifyConfig {
  std::int64_t q = 0;
  int s = 2;
  GeneratorSpec gen_e;
  GeneratorSpec gen_f;
  std::uint32_t trials = 1;
  std::uint64_t seed = 0;
  std::vector<LemmaId> lemmas;
  Caps caps;
};

// Random generators receive per-trial seeds; structured ones repeat.
RunResult run_verify(const VerifyConfig& config);

struct BenchConfig {
  std::int64_t q = 101;
  int s = 2;
  std::uint64_t size_e = 5000;
  std::uint64_t size_f = 5000;
  std::uint32_t repetitions = 5;
  std::uint64_t seed = 0;
  Caps caps;
};

struct BenchReport {
  std::uint32_t q = 0;
  int s = 0;
  std::uint64_t size_e = 0;
  std::uint64_t size_f = 0;
  std::uint32_t repetitions = 0;
  std::optional<double> t_brute;  // median seconds; absent when over the pair cap
  double t_spectral = 0.0;
  std::optional<double> speedup;
  std::optional<bool> match;
  bool mass_ok = false;  // sum_j nu(j) == #E #F on the spectral result
};

BenchReport run_bench(const BenchConfig& config);
std::string bench_to_json(const BenchReport& report);

}  // namespace fqdist
