#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "fqdist/error.hpp"
#include "fqdist/experiment.hpp"
#include "fqdist/generate.hpp"
#include "fqdist/io.hpp"
#include "json.hpp"

using namespace fqdist;

namespace {

template <class F>
Errc error_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::IoError;
}

GeneratorSpec of_kind(GeneratorKind kind) {
  GeneratorSpec spec;
  spec.kind = kind;
  return spec;
}

}  // namespace

TEST_CASE("generators") {
  FieldContext f5(5);
  auto line = generate(f5, 2, of_kind(GeneratorKind::IsotropicLine));
  CHECK(line == PointSet::from_points(5, 2, {{0, 0}, {1, 2}, {2, 4}, {3, 1}, {4, 3}}));
  CHECK(error_of([] { generate(FieldContext(7), 2, of_kind(GeneratorKind::IsotropicLine)); }) ==
        Errc::BadGenerator);
  CHECK(error_of([&] { generate(f5, 3, of_kind(GeneratorKind::IsotropicLine)); }) == Errc::BadGenerator);

  FieldContext f13(13);
  auto a = generate(f13, 2, GeneratorSpec::uniform_random(20, 1));
  auto b = generate(f13, 2, GeneratorSpec::uniform_random(20, 1));
  CHECK(a == b);
  CHECK(a.size() == 20);
  CHECK_FALSE(a == generate(f13, 2, GeneratorSpec::uniform_random(20, 2)));
  CHECK(generate(f13, 2, GeneratorSpec::uniform_random(169, 5)).size() == 169);
  CHECK(error_of([&] { generate(f13, 2, GeneratorSpec::uniform_random(170, 5)); }) == Errc::SizeTooLarge);

  auto sphere = of_kind(GeneratorKind::SphereSet);
  sphere.radius = 1;
  CHECK(generate(FieldContext(3), 2, sphere).size() == 4);

  auto sub = of_kind(GeneratorKind::Subspace);
  sub.dim = 1;
  CHECK(generate(f5, 3, sub).size() == 5);

  auto box = of_kind(GeneratorKind::ProductInterval);
  box.length = 3;
  CHECK(generate(f5, 2, box).size() == 9);

  for (auto kind : {GeneratorKind::UniformRandom, GeneratorKind::IsotropicLine, GeneratorKind::SphereSet,
                    GeneratorKind::Subspace, GeneratorKind::ProductInterval, GeneratorKind::FromFile})
    CHECK(parse_generator(generator_name(kind)) == kind);
}

TEST_CASE("trial seeds are stable and distinct") {
  CHECK(trial_seed(1, 13, 2, 0, 'E') == trial_seed(1, 13, 2, 0, 'E'));
  CHECK(trial_seed(1, 13, 2, 0, 'E') != trial_seed(1, 13, 2, 0, 'F'));
  CHECK(trial_seed(1, 13, 2, 0, 'E') != trial_seed(1, 13, 2, 1, 'E'));
  CHECK(trial_seed(1, 13, 2, 0, 'E') != trial_seed(2, 13, 2, 0, 'E'));
  CounterRng r(9);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
}

TEST_CASE("pointset text format") {
  auto two = parse_pointset("3 2 2\n0 0\n1 0\n");
  CHECK(two == PointSet::from_points(3, 2, {{0, 0}, {1, 0}}));
  CHECK(format_pointset(two) == "3 2 2\n0 0\n1 0\n");
  CHECK(error_of([] { parse_pointset("3 2 1\n5 0\n"); }) == Errc::CoordinateOutOfRange);
  CHECK(error_of([] { parse_pointset("3 2 2\n1 1\n1 1\n"); }) == Errc::DuplicatePoint);
  CHECK(error_of([] { parse_pointset("3 2 2\n1 1\n"); }) == Errc::ParseError);
  CHECK(error_of([] { parse_pointset("3 2 1\n1 x\n"); }) == Errc::ParseError);
  try {
    parse_pointset("5 2 2\n0 0\n1\n");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  FieldContext f13(13);
  auto set = generate(f13, 3, GeneratorSpec::uniform_random(100, 4));
  auto path = (std::filesystem::temp_directory_path() / "fqdist_roundtrip.txt").string();
  write_pointset(set, path);
  CHECK(read_pointset(path) == set);
  std::remove(path.c_str());
  CHECK(error_of([] { read_pointset("/nonexistent/dir/file.txt"); }) == Errc::IoError);

  auto file = of_kind(GeneratorKind::FromFile);
  file.path = path;
  write_pointset(set, path);
  CHECK(generate(f13, 3, file) == set);
  std::remove(path.c_str());
}

TEST_CASE("float rendering") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5) == "-2.5");
}

TEST_CASE("report json has fixed fields") {
  LemmaReport r;
  r.lemma_id = "karte";
  r.hypothesis_met = true;
  r.lhs = 0.5;
  r.rhs_terms = {{"bound", 1.0}};
  r.explicit_pass = true;
  auto j = nlohmann::json::parse(report_to_json(r));
  CHECK(j["lemma_id"] == "karte");
  CHECK(j["rhs_terms"]["bound"] == 1.0);
  CHECK(j["explicit_pass"] == true);
  CHECK(j["measured_constant"].is_null());
  CHECK(j.contains("notes"));
}

TEST_CASE("sweep config parsing and validation") {
  auto cfg = parse_sweep_config(
      "# demo\nq = 3, 5, 7\ns = 2\nsizeE = 4\nsizeF = 0.5\ntrials = 2\nseed = 11\nlemma = insel, karte\n");
  CHECK(cfg.q_list == std::vector<std::int64_t>{3, 5, 7});
  CHECK(cfg.trials == 2);
  CHECK(cfg.lemmas.size() == 2);
  CHECK_NOTHROW(validate(cfg));

  cfg.q_list = {3, 4, 7};
  try {
    validate(cfg);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ConfigError);
    CHECK(std::string(e.what()).find("q[1]") != std::string::npos);
  }
  try {
    parse_sweep_config("q = 3\nbogus = 1\n");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(error_of([] { parse_lemma_list("insel,nope", "lemma"); }) == Errc::ConfigError);
  CHECK(parse_lemma_list("all", "lemma").size() == 10);

  auto half = SizeSpec::parse("0.5");
  REQUIRE(half.has_value());
  CHECK(half->resolve(25) == 13);
  CHECK_FALSE(SizeSpec::parse("1.5").has_value());
  CHECK_FALSE(SizeSpec::parse("0").has_value());
}

TEST_CASE("sweep output is deterministic and well formed") {
  SweepConfig cfg;
  cfg.q_list = {3, 5, 7};
  cfg.s_list = {2, 3};
  cfg.sizes_e = {*SizeSpec::parse("4")};
  cfg.sizes_f = {*SizeSpec::parse("0.3")};
  cfg.trials = 3;
  cfg.seed = 42;
  cfg.lemmas = all_lemmas();
  auto a = to_csv(run_sweep(cfg));
  auto b = to_csv(run_sweep(cfg));
  CHECK(a == b);
  CHECK(a.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  auto result = run_sweep(cfg);
  CHECK_FALSE(result.any_explicit_failure());
  for (const auto& row : result.rows) {
    if (row.lemma == LemmaId::Montblanc) CHECK(row.s % 2 == 0);
    if (row.lemma == LemmaId::Zoff) CHECK(row.trial == 0);
  }
  cfg.seed = 43;
  CHECK(to_csv(run_sweep(cfg)) != a);
}

TEST_CASE("verify") {
  VerifyConfig cfg;
  cfg.q = 7;
  cfg.s = 2;
  cfg.gen_e = GeneratorSpec::uniform_random(10, 0);
  cfg.gen_f = GeneratorSpec::uniform_random(12, 0);
  cfg.trials = 10;
  cfg.seed = 3;
  cfg.lemmas = {LemmaId::Insel};
  auto res = run_verify(cfg);
  CHECK(res.rows.size() == 10);
  CHECK_FALSE(res.any_explicit_failure());

  cfg.lemmas = {LemmaId::Fueller};
  res = run_verify(cfg);
  for (const auto& row : res.rows) CHECK_FALSE(row.report.hypothesis_met);
  CHECK_FALSE(res.any_explicit_failure());

  cfg.s = 3;
  cfg.lemmas = {LemmaId::Montblanc};
  CHECK(error_of([&] { run_verify(cfg); }) == Errc::OddDimension);
}

TEST_CASE("bench on tiny and over-cap inputs") {
  BenchConfig cfg;
  cfg.q = 3;
  cfg.size_e = 3;
  cfg.size_f = 4;
  cfg.repetitions = 3;
  auto r = run_bench(cfg);
  CHECK(r.match == true);
  CHECK(r.mass_ok);
  auto j = nlohmann::json::parse(bench_to_json(r));
  CHECK(j["q"] == 3);
  CHECK(j.contains("speedup"));

  cfg.q = 13;
  cfg.s = 3;
  cfg.size_e = 1000;
  cfg.size_f = 1000;
  cfg.repetitions = 1;
  cfg.caps.pairs = 1000;
  auto over = run_bench(cfg);
  CHECK_FALSE(over.t_brute.has_value());
  CHECK_FALSE(over.match.has_value());
  CHECK(over.mass_ok);
}
