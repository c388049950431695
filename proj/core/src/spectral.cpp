#include "fqdist/spectral.hpp"

#include <cmath>
#include <string>

#include "fqdist/charsums.hpp"
#include "fqdist/error.hpp"

namespace fqdist {
namespace {

void check_cap(const Shape& shape, const Caps& caps) {
  if (shape.size > caps.grid) {
    throw Error(Errc::CapExceeded, "grid of " + std::to_string(shape.size) +
                                       " entries exceeds cap " + std::to_string(caps.grid));
  }
}

// In-place pairwise reduction with a fixed tree: fold the upper half onto
// the lower half until one element remains.
inline double pairwise_sum(double* buf, std::size_t n) {
  while (n > 1) {
    std::size_t half = n / 2;
    std::size_t offset = n - half;
    for (std::size_t i = 0; i < half; ++i) buf[i] += buf[offset + i];
    n = offset;
  }
  return n == 1 ? buf[0] : 0.0;
}

// Applies out[k] = sum_x e(sign * k x / q) in[x] along every axis in turn.
std::vector<Complex> axis_transform(const FieldContext& ctx, const Shape& shape,
                                    std::span<const Complex> input, int sign) {
  const std::uint32_t q = shape.q;
  std::vector<double> wre(q), wim(q);
  for (std::uint32_t j = 0; j < q; ++j) {
    const Complex& c = ctx.additive_character(j);
    wre[j] = c.real();
    wim[j] = sign > 0 ? c.imag() : -c.imag();
  }

  std::vector<Complex> cur(input.begin(), input.end());
  std::vector<double> lre(q), lim(q), pre(q), pim(q);

  std::uint64_t stride = shape.size;
  for (int axis = 0; axis < shape.s; ++axis) {
    stride /= q;
    const std::uint64_t block = stride * q;
    for (std::uint64_t base = 0; base < shape.size; base += block) {
      for (std::uint64_t inner = 0; inner < stride; ++inner) {
        const std::uint64_t start = base + inner;
        // The line is copied out first, so writing results back in place is safe.
        for (std::uint32_t x = 0; x < q; ++x) {
          const Complex& v = cur[start + x * stride];
          lre[x] = v.real();
          lim[x] = v.imag();
        }
        for (std::uint32_t k = 0; k < q; ++k) {
          std::uint32_t idx = 0;
          for (std::uint32_t x = 0; x < q; ++x) {
            pre[x] = lre[x] * wre[idx] - lim[x] * wim[idx];
            pim[x] = lre[x] * wim[idx] + lim[x] * wre[idx];
            idx += k;
            if (idx >= q) idx -= q;
          }
          cur[start + k * stride] = Complex(pairwise_sum(pre.data(), q),
                                            pairwise_sum(pim.data(), q));
        }
      }
    }
  }
  return cur;
}

}  // namespace

FieldElement norm_squared(const FieldContext& ctx, std::span<const FieldElement> x) {
  FieldElement n = 0;
  for (FieldElement c : x) n = ctx.add(n, ctx.square(ctx.reduce(c)));
  return n;
}

Spectrum forward_transform(const FieldContext& ctx, const GridFunction& f, const Caps& caps) {
  check_cap(f.shape(), caps);
  std::vector<Complex> out = axis_transform(ctx, f.shape(), f.values(), -1);
  const double scale = std::pow(static_cast<double>(f.q()), -f.s());
  for (Complex& v : out) v *= scale;
  return Spectrum(f.shape(), std::move(out));
}

GridFunction inverse_transform(const FieldContext& ctx, const Spectrum& spectrum,
                               const Caps& caps) {
  check_cap(spectrum.shape(), caps);
  return GridFunction(spectrum.shape(), axis_transform(ctx, spectrum.shape(), spectrum.values(), 1));
}

double plancherel_gap(const FieldContext& ctx, const GridFunction& f, const Caps& caps) {
  Spectrum spec = forward_transform(ctx, f, caps);
  double freq = 0.0;
  for (const Complex& v : spec.values()) freq += std::norm(v);
  double space = 0.0;
  for (const Complex& v : f.values()) space += std::norm(v);
  space *= std::pow(static_cast<double>(f.q()), -f.s());
  return std::abs(freq - space);
}

Sphere enumerate_sphere(const FieldContext& ctx, int s, FieldElement r, const Caps& caps) {
  Shape shape = Shape::make(ctx.q(), s, caps.grid);
  r = ctx.reduce(r);
  std::vector<FieldElement> norms = norm_table(ctx, shape);
  std::vector<std::uint64_t> members;
  for (std::uint64_t i = 0; i < shape.size; ++i) {
    if (norms[i] == r) members.push_back(i);
  }
  return Sphere{r, PointSet::from_indices(ctx.q(), s, std::move(members))};
}

std::vector<std::uint64_t> sphere_counts(const FieldContext& ctx, int s, const Caps& caps) {
  Shape shape = Shape::make(ctx.q(), s, caps.grid);
  std::vector<std::uint64_t> counts(ctx.q(), 0);
  for (FieldElement n : norm_table(ctx, shape)) ++counts[n];
  return counts;
}

Spectrum sphere_spectrum(const FieldContext& ctx, int s, FieldElement r, SphereMode mode,
                         const Caps& caps) {
  Shape shape = Shape::make(ctx.q(), s, caps.grid);
  r = ctx.reduce(r);
  std::vector<FieldElement> norms = norm_table(ctx, shape);
  if (mode == SphereMode::Direct) {
    GridFunction indicator(shape);
    for (std::uint64_t i = 0; i < shape.size; ++i) {
      if (norms[i] == r) indicator[i] = 1.0;
    }
    return forward_transform(ctx, indicator, caps);
  }
  SphereKernel kernel(ctx, s);
  std::vector<Complex> by_norm(ctx.q());
  for (FieldElement n = 0; n < ctx.q(); ++n) by_norm[n] = kernel.value(r, false, n);
  Spectrum out(shape);
  for (std::uint64_t i = 0; i < shape.size; ++i) out[i] = by_norm[norms[i]];
  out[0] = kernel.value(r, true, 0);
  return out;
}

}  // namespace fqdist
