#include "fqdist/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <string>

#include "fqdist/distance.hpp"
#include "fqdist/error.hpp"
#include "fqdist/io.hpp"
#include "json.hpp"

namespace fqdist {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(sep, start);
    out.push_back(trim(text.substr(start, end == std::string_view::npos ? end : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

[[noreturn]] void config_error(std::string_view field, std::size_t index, std::string_view value,
                               std::string_view reason) {
  throw Error(Errc::ConfigError, std::string(field) + "[" + std::to_string(index) + "] = '" +
                                     std::string(value) + "': " + std::string(reason));
}

template <class T>
bool parse_number(std::string_view text, T& out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

void run_lemmas(const std::vector<LemmaId>& lemmas, const PairAnalysis& pair, ResultRow base,
                RunResult& out) {
  for (LemmaId id : lemmas) {
    if (id == LemmaId::Zoff) continue;
    if (id == LemmaId::Montblanc && pair.s % 2 != 0) continue;
    ResultRow row = base;
    row.lemma = id;
    row.report = run_check(id, pair);
    out.rows.push_back(std::move(row));
  }
}

std::string optional_bool(const std::optional<bool>& v) {
  return v ? (*v ? "true" : "false") : "";
}

}  // namespace

std::optional<SizeSpec> SizeSpec::parse(std::string_view text) {
  text = trim(text);
  SizeSpec spec;
  if (text.find('.') != std::string_view::npos) {
    double f = 0.0;
    if (!parse_number(text, f) || !(f > 0.0 && f < 1.0)) return std::nullopt;
    spec.fractional = true;
    spec.fraction = f;
    return spec;
  }
  std::uint64_t n = 0;
  if (!parse_number(text, n) || n == 0) return std::nullopt;
  spec.absolute = n;
  return spec;
}

std::uint64_t SizeSpec::resolve(std::uint64_t grid_size) const {
  if (!fractional) return absolute;
  auto n = static_cast<std::uint64_t>(std::llround(fraction * static_cast<double>(grid_size)));
  return std::max<std::uint64_t>(n, 1);
}

std::string SizeSpec::str() const {
  return fractional ? format_double(fraction) : std::to_string(absolute);
}

std::vector<std::int64_t> parse_int_list(std::string_view text, std::string_view field) {
  std::vector<std::int64_t> out;
  auto items = split(text, ',');
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::int64_t v = 0;
    if (!parse_number(items[i], v)) config_error(field, i, items[i], "not an integer");
    out.push_back(v);
  }
  return out;
}

std::vector<SizeSpec> parse_size_list(std::string_view text, std::string_view field) {
  std::vector<SizeSpec> out;
  auto items = split(text, ',');
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto spec = SizeSpec::parse(items[i]);
    if (!spec) config_error(field, i, items[i], "expected a positive integer or a fraction in (0, 1)");
    out.push_back(*spec);
  }
  return out;
}

std::vector<LemmaId> parse_lemma_list(std::string_view text, std::string_view field) {
  if (trim(text) == "all") return all_lemmas();
  std::vector<LemmaId> out;
  auto items = split(text, ',');
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto id = parse_lemma(items[i]);
    if (!id) config_error(field, i, items[i], "unknown lemma");
    out.push_back(*id);
  }
  return out;
}

SweepConfig parse_sweep_config(std::string_view text) {
  SweepConfig cfg;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no);
    if (eq == std::string_view::npos) {
      throw Error(Errc::ConfigError, where + ": expected 'key = value'");
    }
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    const std::string field = where + ": " + std::string(key);
    try {
      if (key == "q") {
        cfg.q_list = parse_int_list(value, "q");
      } else if (key == "s") {
        cfg.s_list.clear();
        for (auto v : parse_int_list(value, "s")) cfg.s_list.push_back(static_cast<int>(v));
      } else if (key == "sizeE") {
        cfg.sizes_e = parse_size_list(value, "sizeE");
      } else if (key == "sizeF") {
        cfg.sizes_f = parse_size_list(value, "sizeF");
      } else if (key == "trials") {
        if (!parse_number(value, cfg.trials)) throw Error(Errc::ConfigError, "not an integer");
      } else if (key == "seed") {
        if (!parse_number(value, cfg.seed)) throw Error(Errc::ConfigError, "not an integer");
      } else if (key == "lemma") {
        cfg.lemmas = parse_lemma_list(value, "lemma");
      } else if (key == "out") {
        cfg.output_path = std::string(value);
      } else if (key == "cap_grid") {
        if (!parse_number(value, cfg.caps.grid)) throw Error(Errc::ConfigError, "not an integer");
      } else if (key == "cap_pairs") {
        if (!parse_number(value, cfg.caps.pairs)) throw Error(Errc::ConfigError, "not an integer");
      } else {
        throw Error(Errc::ConfigError, "unknown key");
      }
    } catch (const Error& e) {
      throw Error(Errc::ConfigError, field + ": " + e.what());
    }
  }
  return cfg;
}

void validate(const SweepConfig& cfg) {
  if (cfg.q_list.empty()) throw Error(Errc::ConfigError, "q: empty list");
  if (cfg.s_list.empty()) throw Error(Errc::ConfigError, "s: empty list");
  if (cfg.lemmas.empty()) throw Error(Errc::ConfigError, "lemma: empty list");
  if (cfg.trials < 1) throw Error(Errc::ConfigError, "trials: must be >= 1");
  if (cfg.sizes_e.empty() || cfg.sizes_f.empty()) {
    throw Error(Errc::ConfigError, "sizeE/sizeF: both lists are required");
  }
  if (cfg.sizes_e.size() != cfg.sizes_f.size() && cfg.sizes_e.size() != 1 &&
      cfg.sizes_f.size() != 1) {
    throw Error(Errc::ConfigError, "sizeE/sizeF: lists of different lengths " +
                                       std::to_string(cfg.sizes_e.size()) + " and " +
                                       std::to_string(cfg.sizes_f.size()));
  }
  for (std::size_t i = 0; i < cfg.s_list.size(); ++i) {
    if (cfg.s_list[i] < 1) {
      config_error("s", i, std::to_string(cfg.s_list[i]), "dimension must be >= 1");
    }
  }
  for (std::size_t i = 0; i < cfg.q_list.size(); ++i) {
    const std::int64_t q = cfg.q_list[i];
    try {
      FieldContext ctx(q);
    } catch (const Error& e) {
      config_error("q", i, std::to_string(q), e.what());
    }
    for (int s : cfg.s_list) {
      Shape shape;
      try {
        shape = Shape::make(static_cast<std::uint32_t>(q), s, cfg.caps.grid);
      } catch (const Error& e) {
        config_error("q", i, std::to_string(q), "with s = " + std::to_string(s) + ": " + e.what());
      }
      auto check_sizes = [&](const std::vector<SizeSpec>& list, std::string_view field) {
        for (std::size_t k = 0; k < list.size(); ++k) {
          const std::uint64_t n = list[k].resolve(shape.size);
          if (n > shape.size) {
            config_error(field, k, list[k].str(),
                         "exceeds q^s = " + std::to_string(shape.size) + " for q = " +
                             std::to_string(q) + ", s = " + std::to_string(s));
          }
        }
      };
      check_sizes(cfg.sizes_e, "sizeE");
      check_sizes(cfg.sizes_f, "sizeF");
    }
  }
}

bool RunResult::any_explicit_failure() const noexcept {
  return std::any_of(rows.begin(), rows.end(), [](const ResultRow& r) {
    return r.report.explicit_pass.has_value() && !*r.report.explicit_pass;
  });
}

std::string to_csv(const RunResult& result) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const ResultRow& r : result.rows) {
    out += r.report.lemma_id;
    out += ',' + std::to_string(r.q) + ',' + std::to_string(r.s) + ',' + std::to_string(r.size_e) +
           ',' + std::to_string(r.size_f) + ',' + std::to_string(r.trial) + ',' +
           std::to_string(r.seed) + ',' + (r.report.hypothesis_met ? "true" : "false") + ',' +
           format_double(r.report.lhs) + ',' + optional_bool(r.report.explicit_pass) + ',' +
           (r.report.measured_constant ? format_double(*r.report.measured_constant) : "");
    out += '\n';
  }
  return out;
}

std::string to_jsonl(const RunResult& result) {
  std::string out;
  for (const ResultRow& r : result.rows) {
    out += "{\"q\":" + std::to_string(r.q) + ",\"s\":" + std::to_string(r.s) +
           ",\"sizeE\":" + std::to_string(r.size_e) + ",\"sizeF\":" + std::to_string(r.size_f) +
           ",\"trial\":" + std::to_string(r.trial) + ",\"seed\":" + std::to_string(r.seed) +
           ",\"report\":" + report_to_json(r.report) + "}\n";
  }
  return out;
}

RunResult run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  RunResult out;
  const bool want_zoff = std::find(cfg.lemmas.begin(), cfg.lemmas.end(), LemmaId::Zoff) !=
                         cfg.lemmas.end();
  const std::size_t pairs = std::max(cfg.sizes_e.size(), cfg.sizes_f.size());
  for (std::int64_t qv : cfg.q_list) {
    FieldContext ctx(qv);
    const std::uint32_t q = ctx.q();
    for (int s : cfg.s_list) {
      const Shape shape = Shape::make(q, s, cfg.caps.grid);
      if (want_zoff) {
        ResultRow row;
        row.lemma = LemmaId::Zoff;
        row.q = q;
        row.s = s;
        row.seed = cfg.seed;
        row.report = check_zoff(ctx, s, cfg.caps);
        out.rows.push_back(std::move(row));
      }
      for (std::size_t k = 0; k < pairs; ++k) {
        const SizeSpec& se = cfg.sizes_e[cfg.sizes_e.size() == 1 ? 0 : k];
        const SizeSpec& sf = cfg.sizes_f[cfg.sizes_f.size() == 1 ? 0 : k];
        const std::uint64_t ne = se.resolve(shape.size);
        const std::uint64_t nf = sf.resolve(shape.size);
        for (std::uint64_t t = 0; t < cfg.trials; ++t) {
          auto ge = GeneratorSpec::uniform_random(ne, trial_seed(cfg.seed, q, s, t, 'E'));
          auto gf = GeneratorSpec::uniform_random(nf, trial_seed(cfg.seed, q, s, t, 'F'));
          PairAnalysis pair = analyze_pair(ctx, generate(ctx, s, ge), generate(ctx, s, gf), cfg.caps);
          ResultRow base;
          base.q = q;
          base.s = s;
          base.size_e = ne;
          base.size_f = nf;
          base.trial = t;
          base.seed = cfg.seed;
          run_lemmas(cfg.lemmas, pair, base, out);
        }
      }
    }
  }
  return out;
}

RunResult run_verify(const VerifyConfig& cfg) {
  FieldContext ctx(cfg.q);
  const std::uint32_t q = ctx.q();
  Shape::make(q, cfg.s, cfg.caps.grid);
  RunResult out;
  if (std::find(cfg.lemmas.begin(), cfg.lemmas.end(), LemmaId::Montblanc) != cfg.lemmas.end() &&
      cfg.s % 2 != 0) {
    throw Error(Errc::OddDimension, "montblanc requires even s, got s = " + std::to_string(cfg.s));
  }
  if (std::find(cfg.lemmas.begin(), cfg.lemmas.end(), LemmaId::Zoff) != cfg.lemmas.end()) {
    ResultRow row;
    row.lemma = LemmaId::Zoff;
    row.q = q;
    row.s = cfg.s;
    row.seed = cfg.seed;
    row.report = check_zoff(ctx, cfg.s, cfg.caps);
    out.rows.push_back(std::move(row));
  }
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    GeneratorSpec ge = cfg.gen_e;
    GeneratorSpec gf = cfg.gen_f;
    ge.seed = trial_seed(cfg.seed, q, cfg.s, t, 'E');
    gf.seed = trial_seed(cfg.seed, q, cfg.s, t, 'F');
    PointSet e = generate(ctx, cfg.s, ge);
    PointSet f = generate(ctx, cfg.s, gf);
    ResultRow base;
    base.q = q;
    base.s = cfg.s;
    base.size_e = e.size();
    base.size_f = f.size();
    base.trial = t;
    base.seed = cfg.seed;
    PairAnalysis pair = analyze_pair(ctx, std::move(e), std::move(f), cfg.caps);
    run_lemmas(cfg.lemmas, pair, base, out);
  }
  return out;
}

BenchReport run_bench(const BenchConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  FieldContext ctx(cfg.q);
  const std::uint32_t q = ctx.q();
  Shape::make(q, cfg.s, cfg.caps.grid);
  PointSet e = generate(
      ctx, cfg.s, GeneratorSpec::uniform_random(cfg.size_e, trial_seed(cfg.seed, q, cfg.s, 0, 'E')));
  PointSet f = generate(
      ctx, cfg.s, GeneratorSpec::uniform_random(cfg.size_f, trial_seed(cfg.seed, q, cfg.s, 0, 'F')));
  BenchReport rep;
  rep.q = q;
  rep.s = cfg.s;
  rep.size_e = e.size();
  rep.size_f = f.size();
  rep.repetitions = std::max<std::uint32_t>(cfg.repetitions, 1);
  const bool brute_ok = e.size() * f.size() <= cfg.caps.pairs;

  std::vector<double> t_brute, t_spectral;
  DistanceDistribution brute, spectral;
  for (std::uint32_t r = 0; r < rep.repetitions; ++r) {
    auto t0 = Clock::now();
    spectral = nu_spectral(ctx, e, f, cfg.caps);
    auto t1 = Clock::now();
    t_spectral.push_back(std::chrono::duration<double>(t1 - t0).count());
    if (brute_ok) {
      auto t2 = Clock::now();
      brute = nu_brute(ctx, e, f, cfg.caps);
      auto t3 = Clock::now();
      t_brute.push_back(std::chrono::duration<double>(t3 - t2).count());
    }
  }
  rep.t_spectral = median(t_spectral);
  rep.mass_ok = spectral.mass() == e.size() * f.size();
  if (brute_ok) {
    rep.t_brute = median(t_brute);
    rep.speedup = *rep.t_brute / rep.t_spectral;
    rep.match = brute.nu == spectral.nu;
  }
  return rep;
}

std::string bench_to_json(const BenchReport& rep) {
  nlohmann::ordered_json j;
  j["q"] = rep.q;
  j["s"] = rep.s;
  j["sizes"] = {rep.size_e, rep.size_f};
  j["repetitions"] = rep.repetitions;
  j["t_brute"] = rep.t_brute ? nlohmann::ordered_json(*rep.t_brute) : nlohmann::ordered_json(nullptr);
  j["t_spectral"] = rep.t_spectral;
  j["speedup"] = rep.speedup ? nlohmann::ordered_json(*rep.speedup) : nlohmann::ordered_json(nullptr);
  j["match"] = rep.match ? nlohmann::ordered_json(*rep.match) : nlohmann::ordered_json(nullptr);
  j["mass_ok"] = rep.mass_ok;
  return j.dump();
}

}  // namespace fqdist
