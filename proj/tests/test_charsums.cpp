#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "fqdist/charsums.hpp"
#include "fqdist/spectral.hpp"
#include "oracles.hpp"

using namespace fqdist;

TEST_CASE("gauss data") {
  auto g5 = gauss_data(FieldContext(5));
  CHECK(std::abs(g5.c_q - Complex(1, 0)) < 1e-9);
  CHECK(std::abs(g5.g - Complex(std::sqrt(5.0), 0)) < 1e-9);
  auto g3 = gauss_data(FieldContext(3));
  CHECK(std::abs(g3.c_q - Complex(0, 1)) < 1e-9);

  for (std::int64_t q : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 101}) {
    FieldContext ctx(q);
    auto gd = gauss_data(ctx);
    CHECK(std::abs(std::abs(gd.c_q) - 1.0) < 1e-12);
    CHECK(std::abs(gd.g * gd.g - Complex(oracle::eta(-1, q) * static_cast<double>(q), 0)) < 1e-9);
    Complex sign = q % 4 == 1 ? Complex(1, 0) : Complex(0, 1);
    CHECK(std::abs(gd.c_q - sign) < 1e-9);
    CHECK(gd.q_mod_4 == q % 4);
    for (int s = 1; s <= 4; ++s) {
      // Even s: both conventions agree. Odd s: they differ by eta(-1)^s.
      Complex literal = std::pow(gd.c_q, s);
      Complex used = gd.sphere_constant(s);
      if (s % 2 == 0 || q % 4 == 1) {
        CHECK(std::abs(used - literal) < 1e-12);
      } else {
        CHECK(std::abs(used + literal) < 1e-12);
      }
    }
  }
}

TEST_CASE("kloosterman and salie by direct summation") {
  FieldContext f5(5);
  Complex k = kloosterman(f5, 1, 1);
  CHECK(k.real() == doctest::Approx(0.3819660112501051).epsilon(1e-12));
  CHECK(std::abs(k.imag()) < 1e-12);
  CHECK(std::abs(kloosterman(f5, 1, 0) - Complex(-1, 0)) < 1e-12);
  CHECK(std::abs(salie(FieldContext(3), 0, 0)) < 1e-12);
  CHECK(std::abs(salie(f5, 1, 1)) <= 2 * std::sqrt(5.0));
  CHECK(std::abs(kloosterman(FieldContext(7), 1, 1)) <= 2 * std::sqrt(7.0));
  CHECK(std::abs(salie(FieldContext(7), 2, 3)) <= 2 * std::sqrt(7.0));

  for (std::int64_t q : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    FieldContext ctx(q);
    const double bound = 2 * std::sqrt(static_cast<double>(q)) + 1e-9;
    for (FieldElement a = 1; a < ctx.q(); ++a) {
      for (FieldElement b = 1; b < ctx.q(); ++b) {
        Complex kab = kloosterman(ctx, a, b);
        REQUIRE(std::abs(kab) <= bound);
        REQUIRE(std::abs(salie(ctx, a, b)) <= bound);
        // Classical Kloosterman sums are real.
        REQUIRE(std::abs(kab.imag()) < 1e-9);
      }
    }
  }
}

TEST_CASE("sphere_fourier_closed examples") {
  FieldContext f3(3);
  FieldElement zero2[] = {0, 0};
  Complex v = sphere_fourier_closed(f3, 2, 1, zero2);
  CHECK(std::abs(v - Complex(4.0 / 9.0, 0)) < 1e-10);

  FieldContext f5(5);
  FieldElement m12[] = {1, 2};
  CHECK(std::abs(sphere_fourier_closed(f5, 2, 0, m12) - Complex(0.16, 0)) < 1e-10);

  FieldElement m100[] = {1, 0, 0};
  Complex odd = sphere_fourier_closed(f3, 3, 1, m100);
  CHECK(std::abs(odd) <= 2.0 / 9.0 + 1e-12);
  // Frozen from the definition: the direct sum gives +1/9 here.
  CHECK(std::abs(odd - oracle::sphere_hat(3, 3, 1, {1, 0, 0})) < 1e-12);
  CHECK(std::abs(odd - Complex(1.0 / 9.0, 0)) < 1e-12);
}

TEST_CASE("closed form agrees with the definition") {
  for (std::int64_t q : {3, 5, 7}) {
    FieldContext ctx(q);
    for (int s = 1; s <= 3; ++s) {
      const std::uint64_t n = oracle::grid_size(q, s);
      std::vector<FieldElement> m(static_cast<std::size_t>(s));
      for (std::int64_t r = 0; r < q; ++r) {
        for (std::uint64_t mi = 0; mi < n; ++mi) {
          auto mm = oracle::decode(mi, q, s);
          for (int i = 0; i < s; ++i) m[i] = static_cast<FieldElement>(mm[i]);
          Complex closed = sphere_fourier_closed(ctx, s, static_cast<FieldElement>(r), m);
          REQUIRE(std::abs(closed - oracle::sphere_hat(q, s, r, mm)) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("closed form matches the direct transform for q <= 13") {
  for (std::int64_t q : {3, 5, 7, 11, 13}) {
    FieldContext ctx(q);
    for (int s = 1; s <= 3; ++s) {
      for (FieldElement r = 0; r < ctx.q(); ++r) {
        auto direct = sphere_spectrum(ctx, s, r, SphereMode::Direct);
        auto closed = sphere_spectrum(ctx, s, r, SphereMode::ClosedForm);
        double gap = 0;
        for (std::uint64_t i = 0; i < direct.size(); ++i)
          gap = std::max(gap, std::abs(direct[i] - closed[i]));
        REQUIRE(gap <= 1e-9);
      }
    }
  }
}

TEST_CASE("closed form on random samples at q = 31") {
  FieldContext ctx(31);
  std::mt19937_64 rng(7);
  for (int s : {2, 3}) {
    std::vector<Spectrum> direct;
    for (FieldElement r = 0; r < 31; ++r) direct.push_back(sphere_spectrum(ctx, s, r, SphereMode::Direct));
    Shape shape = Shape::make(31, s);
    std::vector<FieldElement> m(static_cast<std::size_t>(s));
    for (int k = 0; k < 1000; ++k) {
      FieldElement r = static_cast<FieldElement>(rng() % 31);
      std::uint64_t idx = rng() % shape.size;
      shape.decode(idx, m);
      REQUIRE(std::abs(direct[r][idx] - sphere_fourier_closed(ctx, s, r, m)) <= 1e-9);
    }
  }
}

TEST_CASE("sphere transform bounds with explicit constants") {
  for (std::int64_t q : {3, 5, 7, 11, 13}) {
    FieldContext ctx(q);
    const double qd = static_cast<double>(q);
    for (int s : {2, 3}) {
      SphereKernel kernel(ctx, s);
      for (FieldElement r = 0; r < ctx.q(); ++r) {
        CHECK(std::abs(kernel.value(r, true, 0)) <= 2 / qd + 1e-15);
        for (FieldElement nm = 0; nm < ctx.q(); ++nm) {
          double v = std::abs(kernel.value(r, false, nm));
          CHECK(v <= std::pow(qd, -s / 2.0) * (1 + 1e-12));
          if (r != 0 || s % 2 == 1) CHECK(v <= 2 * std::pow(qd, -(s + 1) / 2.0) * (1 + 1e-12));
          if (s % 2 == 0 && r == 0 && nm != 0) CHECK(v <= 2 * std::pow(qd, -s / 2.0 - 1) * (1 + 1e-12));
        }
      }
    }
  }
}
