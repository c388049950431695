#include "fqdist/charsums.hpp"

#include <cmath>
#include <string>

#include "fqdist/error.hpp"

namespace fqdist {

Complex GaussData::sphere_constant(int s) const {
  Complex base = eta_minus_one == 1 ? c_q : std::conj(c_q);
  Complex out(1.0, 0.0);
  for (int i = 0; i < s; ++i) out *= base;
  return out;
}

GaussData gauss_data(const FieldContext& ctx) {
  const std::uint32_t q = ctx.q();
  Complex g(0.0, 0.0);
  for (FieldElement t = 1; t < q; ++t) {
    g += static_cast<double>(ctx.quadratic_character(t)) * ctx.additive_character(t);
  }
  GaussData out;
  out.g = g;
  out.c_q = g / std::sqrt(static_cast<double>(q));
  out.q_mod_4 = static_cast<int>(q % 4);
  out.eta_minus_one = ctx.quadratic_character(q - 1);
  return out;
}

Complex kloosterman(const FieldContext& ctx, FieldElement a, FieldElement b) {
  a = ctx.reduce(a);
  b = ctx.reduce(b);
  Complex sum(0.0, 0.0);
  for (FieldElement t = 1; t < ctx.q(); ++t) {
    sum += ctx.additive_character(ctx.add(ctx.mul(a, t), ctx.mul(b, ctx.inverse(t))));
  }
  return sum;
}

Complex salie(const FieldContext& ctx, FieldElement a, FieldElement b) {
  a = ctx.reduce(a);
  b = ctx.reduce(b);
  Complex sum(0.0, 0.0);
  for (FieldElement t = 1; t < ctx.q(); ++t) {
    sum += static_cast<double>(ctx.quadratic_character(t)) *
           ctx.additive_character(ctx.add(ctx.mul(a, t), ctx.mul(b, ctx.inverse(t))));
  }
  return sum;
}

SphereKernel::SphereKernel(const FieldContext& ctx, int s)
    : ctx_(&ctx), s_(s), gauss_(gauss_data(ctx)), inv4_(ctx.inverse(4 % ctx.q())) {
  if (s < 1) throw Error(Errc::ConfigError, "dimension s = " + std::to_string(s) + " < 1");
  double scale = std::pow(static_cast<double>(ctx.q()), -0.5 * s - 1.0);
  prefactor_ = scale * gauss_.sphere_constant(s);
}

Complex SphereKernel::j_sum(FieldElement r, FieldElement norm_m) const {
  const FieldContext& ctx = *ctx_;
  const FieldElement b = ctx.mul(ctx.reduce(norm_m), inv4_);
  r = ctx.reduce(r);
  Complex sum(0.0, 0.0);
  for (FieldElement j = 1; j < ctx.q(); ++j) {
    const Complex& e = ctx.additive_character(ctx.add(ctx.mul(j, r), ctx.mul(b, ctx.inverse(j))));
    if (s_ % 2 == 0) {
      sum += e;
    } else {
      sum += static_cast<double>(ctx.quadratic_character(j)) * e;
    }
  }
  return sum;
}

Complex SphereKernel::value(FieldElement r, bool m_is_zero, FieldElement norm_m) const {
  Complex out = prefactor_ * j_sum(r, norm_m);
  if (m_is_zero) out += 1.0 / static_cast<double>(ctx_->q());
  return out;
}

Complex sphere_fourier_closed(const FieldContext& ctx, int s, FieldElement r,
                              std::span<const FieldElement> m) {
  SphereKernel kernel(ctx, s);
  bool zero = true;
  FieldElement norm = 0;
  for (FieldElement x : m) {
    FieldElement v = ctx.reduce(x);
    zero = zero && v == 0;
    norm = ctx.add(norm, ctx.square(v));
  }
  return kernel.value(r, zero, norm);
}

}  // namespace fqdist
