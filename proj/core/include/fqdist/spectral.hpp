#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fqdist/grid.hpp"
#include "fqdist/pointset.hpp"
#include "fqdist/prime_field.hpp"

namespace fqdist {

// |x|^2 = sum_i x_i^2 mod q.
FieldElement norm_squared(const FieldContext& ctx, std::span<const FieldElement> x);

// f^(m) = q^{-s} sum_x e(-m.x/q) f(x), evaluated as s axis passes of a
// dense length-q DFT against the character table. Each length-q reduction
// uses a fixed pairwise tree, so output is bit-for-bit reproducible.
Spectrum forward_transform(const FieldContext& ctx, const GridFunction& f,
                           const Caps& caps = {});

// f(x) = sum_m e(m.x/q) F(m); no prefactor.
GridFunction inverse_transform(const FieldContext& ctx, const Spectrum& spectrum,
                               const Caps& caps = {});

// | sum_m |f^(m)|^2 - q^{-s} sum_x |f(x)|^2 |
double plancherel_gap(const FieldContext& ctx, const GridFunction& f, const Caps& caps = {});

struct Sphere {
  FieldElement r = 0;
  PointSet points;
  std::uint64_t count() const noexcept { return points.size(); }
};

Sphere enumerate_sphere(const FieldContext& ctx, int s, FieldElement r, const Caps& caps = {});

// counts[r] = |S_r|; one pass over the grid.
std::vector<std::uint64_t> sphere_counts(const FieldContext& ctx, int s, const Caps& caps = {});

enum class SphereMode { Direct, ClosedForm };

Spectrum sphere_spectrum(const FieldContext& ctx, int s, FieldElement r, SphereMode mode,
                         const Caps& caps = {});

}  // namespace fqdist
