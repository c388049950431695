#include <cmath>
#include <vector>

#include "doctest.h"
#include "fqdist/error.hpp"
#include "fqdist/generate.hpp"
#include "fqdist/lemma_lab.hpp"
#include "oracles.hpp"

using namespace fqdist;

namespace {

PointSet random_set(const FieldContext& ctx, int s, std::uint64_t size, std::uint64_t seed) {
  return generate(ctx, s, GeneratorSpec::uniform_random(size, seed));
}

PointSet full_grid(std::uint32_t q, int s) {
  std::vector<std::uint64_t> all(oracle::grid_size(q, s));
  for (std::uint64_t i = 0; i < all.size(); ++i) all[i] = i;
  return PointSet::from_indices(q, s, all);
}

PointSet isotropic(const FieldContext& ctx) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::IsotropicLine;
  return generate(ctx, 2, spec);
}

}  // namespace

TEST_CASE("lemma names round trip") {
  for (auto id : all_lemmas()) CHECK(parse_lemma(lemma_name(id)) == id);
  CHECK_FALSE(parse_lemma("nope").has_value());
  CHECK(all_lemmas().size() == 10);
}

TEST_CASE("von1717") {
  FieldContext f3(3);
  auto r = check_von1717(f3, PointSet::from_points(3, 2, {{0, 0}}));
  CHECK(r.lhs == doctest::Approx(1.0 / 9).epsilon(1e-12));
  CHECK(r.explicit_pass == true);
  CHECK(check_von1717(f3, full_grid(3, 2)).explicit_pass == true);
  FieldContext f13(13);
  CHECK(check_von1717(f13, random_set(f13, 2, 50, 3)).explicit_pass == true);
}

TEST_CASE("insel") {
  FieldContext f3(3);
  auto two = PointSet::from_points(3, 2, {{0, 0}, {1, 0}});
  CHECK(check_insel(analyze_pair(f3, two, two)).explicit_pass == true);
  FieldContext f13(13);
  auto pair = analyze_pair(f13, random_set(f13, 2, 40, 1), random_set(f13, 2, 40, 2));
  CHECK(check_insel(pair).explicit_pass == true);
}

TEST_CASE("fueller") {
  FieldContext f31(31);
  auto grid = full_grid(31, 2);
  auto r = check_fueller(analyze_pair(f31, grid, grid));
  CHECK(r.hypothesis_met);
  CHECK(r.lhs == doctest::Approx(961));
  CHECK(r.explicit_pass == true);

  FieldContext f7(7);
  auto small = check_fueller(analyze_pair(f7, random_set(f7, 2, 5, 1), random_set(f7, 2, 6, 2)));
  CHECK_FALSE(small.hypothesis_met);
  // Only the unconditional delta bound is asserted.
  CHECK(small.explicit_pass == true);
  for (std::uint64_t t = 0; t < 10; ++t) {
    auto pr = analyze_pair(f7, random_set(f7, 2, 10 + t, t), random_set(f7, 2, 20 + t, t + 7));
    CHECK(check_fueller(pr).explicit_pass == true);
  }
}

TEST_CASE("rollei") {
  FieldContext f3(3);
  auto single = PointSet::from_points(3, 2, {{0, 0}});
  auto r = check_rollei(analyze_pair(f3, single, single));
  CHECK(r.lhs == doctest::Approx(1.0));
  CHECK(r.explicit_pass == true);
  FieldContext f7(7);
  for (std::uint64_t t = 0; t < 10; ++t) {
    auto pr = analyze_pair(f7, random_set(f7, 2, 10 + t, t), random_set(f7, 2, 20 + t, t + 3));
    CHECK(check_rollei(pr).explicit_pass == true);
  }
  CHECK(check_rollei(analyze_pair(f7, full_grid(7, 2), full_grid(7, 2))).explicit_pass == true);
}

TEST_CASE("montblanc") {
  FieldContext f31(31);
  auto r = check_montblanc(analyze_pair(f31, full_grid(31, 2), full_grid(31, 2)));
  CHECK_FALSE(r.explicit_pass.has_value());
  REQUIRE(r.measured_constant.has_value());
  CHECK(std::isfinite(*r.measured_constant));
  CHECK(*r.measured_constant >= 0);

  FieldContext f5(5);
  auto odd = analyze_pair(f5, random_set(f5, 3, 10, 1), random_set(f5, 3, 10, 2));
  try {
    check_montblanc(odd);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OddDimension);
  }
}

TEST_CASE("tavanic") {
  FieldContext f13(13);
  for (std::uint64_t t = 0; t < 5; ++t) {
    auto r = check_tavanic(analyze_pair(f13, random_set(f13, 2, 60, t), random_set(f13, 2, 30, t + 9)));
    REQUIRE(r.measured_constant.has_value());
    CHECK(std::isfinite(*r.measured_constant));
    CHECK(r.term("envelope_alt").has_value());
  }
  FieldContext f7(7);
  auto odd = check_tavanic(analyze_pair(f7, random_set(f7, 3, 30, 1), random_set(f7, 3, 30, 2)));
  CHECK(odd.term("lhs_including_r0").has_value());
}

TEST_CASE("karte") {
  FieldContext f3(3);
  CHECK(check_karte(f3, PointSet::from_points(3, 2, {{1, 1}})).explicit_pass == true);
  FieldContext f13(13);
  for (std::uint64_t t = 0; t < 10; ++t)
    CHECK(check_karte(f13, random_set(f13, 2, 10 + 15 * t, t)).explicit_pass == true);
  FieldContext f7(7);
  for (std::uint64_t t = 0; t < 5; ++t)
    CHECK(check_karte(f7, random_set(f7, 3, 10 + 40 * t, t)).explicit_pass == true);
}

TEST_CASE("zoff") {
  CHECK(check_zoff(FieldContext(5), 2).explicit_pass == true);
  CHECK(check_zoff(FieldContext(13), 3).explicit_pass == true);
  CHECK(check_zoff(FieldContext(31), 2).explicit_pass == true);
}

TEST_CASE("dyadic decomposition") {
  FieldContext f13(13);
  for (std::uint64_t t = 0; t < 5; ++t) {
    auto e = random_set(f13, 2, 30 + t, t);
    auto f = random_set(f13, 2, 50 + t, t + 1);
    auto d = dyadic_decompose(spherical_profile(f13, f), spherical_profile(f13, e), f.size());
    CHECK(d.pigeonhole_ok);
    CHECK(d.band_ok);
    CHECK(d.square_sum_ok);
    CHECK(d.pair_sum_ok);
    REQUIRE(d.chosen_level.has_value());
    CHECK(d.a == std::ldexp(1.0, *d.chosen_level - 1));
    std::uint64_t members = d.below_floor;
    for (const auto& lv : d.levels) members += lv.members;
    CHECK(members == 12);
  }

  // Constant on F_q^*.
  SphericalProfile flat{SphericalProfile::Kind::SingleSet, 5, 2, std::vector<Complex>(5, Complex(0.01, 0))};
  auto d = dyadic_decompose(flat, flat, 1);
  int occupied = 0;
  for (const auto& lv : d.levels) occupied += lv.members > 0;
  CHECK(occupied == 1);
  CHECK(d.m == std::vector<FieldElement>{1, 2, 3, 4});

  SphericalProfile tiny{SphericalProfile::Kind::SingleSet, 5, 2, std::vector<Complex>(5, Complex(1e-30, 0))};
  auto dt = dyadic_decompose(tiny, tiny, 1);
  CHECK_FALSE(dt.chosen_level.has_value());
  CHECK(dt.m.empty());
  CHECK(dt.below_floor == 4);
  CHECK(dt.pigeonhole_ok);
}

TEST_CASE("theorem") {
  FieldContext f31(31);
  auto r = check_theorem(analyze_pair(f31, random_set(f31, 2, 932, 1), random_set(f31, 2, 932, 2)));
  CHECK(r.hypothesis_met);
  CHECK(r.lhs == 31);
  REQUIRE(r.measured_constant.has_value());
  CHECK(*r.measured_constant >= 1.0);

  FieldContext f13(13);
  auto line = isotropic(f13);
  auto iso = check_theorem(analyze_pair(f13, line, line));
  CHECK_FALSE(iso.hypothesis_met);
  CHECK(iso.lhs == 1);

  auto single = PointSet::from_points(13, 2, {{1, 1}});
  CHECK_FALSE(check_theorem(analyze_pair(f13, single, single)).hypothesis_met);

  // Swapping the arguments changes nothing.
  auto a = random_set(f13, 2, 20, 4);
  auto b = random_set(f13, 2, 90, 5);
  CHECK(check_theorem(analyze_pair(f13, a, b)).measured_constant ==
        check_theorem(analyze_pair(f13, b, a)).measured_constant);
}

TEST_CASE("tourist") {
  FieldContext f31(31);
  auto r = check_tourist(analyze_pair(f31, random_set(f31, 2, 932, 3), random_set(f31, 2, 932, 4)));
  CHECK(r.hypothesis_met);
  REQUIRE(r.measured_constant.has_value());
  CHECK(std::isfinite(*r.measured_constant));

  FieldContext f7(7);
  auto g = full_grid(7, 2);
  auto full = check_tourist(analyze_pair(f7, g, g));
  CHECK(std::isfinite(full.lhs));
  auto tiny = check_tourist(analyze_pair(f7, random_set(f7, 2, 3, 1), random_set(f7, 2, 3, 2)));
  CHECK_FALSE(tiny.hypothesis_met);
}

TEST_CASE("spectral nu is used above the pair cap") {
  FieldContext f13(13);
  Caps caps;
  caps.pairs = 100;
  auto pr = analyze_pair(f13, random_set(f13, 2, 30, 1), random_set(f13, 2, 30, 2), caps);
  CHECK_FALSE(pr.nu_from_brute);
  CHECK(pr.nu.mass() == 900);
}
