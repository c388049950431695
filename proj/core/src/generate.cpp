#include "fqdist/generate.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>
#include <vector>

#include "fqdist/error.hpp"
#include "fqdist/io.hpp"
#include "fqdist/spectral.hpp"

namespace fqdist {
namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::array<std::pair<GeneratorKind, std::string_view>, 6> kNames{{
    {GeneratorKind::UniformRandom, "uniform_random"},
    {GeneratorKind::IsotropicLine, "isotropic_line"},
    {GeneratorKind::SphereSet, "sphere_set"},
    {GeneratorKind::Subspace, "subspace"},
    {GeneratorKind::ProductInterval, "product_interval"},
    {GeneratorKind::FromFile, "from_file"},
}};

// Floyd's sampling of k distinct values from [0, n), returned sorted.
std::vector<std::uint64_t> sample_distinct(std::uint64_t n, std::uint64_t k, CounterRng& rng) {
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(k * 2);
  std::vector<std::uint64_t> out;
  out.reserve(k);
  for (std::uint64_t j = n - k; j < n; ++j) {
    std::uint64_t t = rng.below(j + 1);
    std::uint64_t pick = chosen.insert(t).second ? t : j;
    if (pick == j) chosen.insert(j);
    out.push_back(pick);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += kGamma;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t CounterRng::next() noexcept { return splitmix64(seed_ + kGamma * counter_++); }

std::uint64_t CounterRng::below(std::uint64_t bound) noexcept {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    std::uint64_t v = next();
    if (v < limit) return v % bound;
  }
}

std::uint64_t trial_seed(std::uint64_t master, std::uint32_t q, int s, std::uint64_t trial,
                         char role) noexcept {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ q);
  h = splitmix64(h ^ static_cast<std::uint64_t>(s));
  h = splitmix64(h ^ trial);
  return splitmix64(h ^ static_cast<std::uint64_t>(static_cast<unsigned char>(role)));
}

std::string_view generator_name(GeneratorKind kind) noexcept {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<GeneratorKind> parse_generator(std::string_view name) noexcept {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

PointSet generate(const FieldContext& ctx, int s, const GeneratorSpec& spec) {
  const std::uint32_t q = ctx.q();
  Shape shape = Shape::make(q, s);
  switch (spec.kind) {
    case GeneratorKind::UniformRandom: {
      if (spec.size < 1 || spec.size > shape.size) {
        throw Error(Errc::SizeTooLarge, "uniform_random size " + std::to_string(spec.size) +
                                            " not in [1, q^s = " + std::to_string(shape.size) +
                                            "]");
      }
      CounterRng rng(spec.seed);
      return PointSet::from_indices(q, s, sample_distinct(shape.size, spec.size, rng));
    }
    case GeneratorKind::IsotropicLine: {
      if (s != 2 || q % 4 != 1) {
        throw Error(Errc::BadGenerator, "isotropic_line needs s = 2 and q = 1 mod 4 (q = " +
                                            std::to_string(q) + ", s = " + std::to_string(s) +
                                            ")");
      }
      const FieldElement i = *ctx.sqrt_mod(q - 1);
      std::vector<std::vector<FieldElement>> pts;
      for (FieldElement x = 0; x < q; ++x) pts.push_back({x, ctx.mul(i, x)});
      return PointSet::from_points(q, s, pts);
    }
    case GeneratorKind::SphereSet: {
      Sphere sphere = enumerate_sphere(ctx, s, spec.radius, Caps{UINT64_MAX, UINT64_MAX});
      if (spec.size == 0 || spec.size == sphere.count()) return sphere.points;
      if (spec.size > sphere.count()) {
        throw Error(Errc::SizeTooLarge, "sphere_set size " + std::to_string(spec.size) +
                                            " > |S_r| = " + std::to_string(sphere.count()));
      }
      CounterRng rng(spec.seed);
      std::vector<std::uint64_t> picks = sample_distinct(sphere.count(), spec.size, rng);
      std::vector<std::uint64_t> indices;
      for (std::uint64_t k : picks) indices.push_back(sphere.points.indices()[k]);
      return PointSet::from_indices(q, s, std::move(indices));
    }
    case GeneratorKind::Subspace: {
      if (spec.dim < 0 || spec.dim > s) {
        throw Error(Errc::BadGenerator, "subspace dim " + std::to_string(spec.dim) +
                                            " not in [0, s]");
      }
      std::uint64_t stride = 1;
      for (int i = spec.dim; i < s; ++i) stride *= q;
      std::uint64_t count = shape.size / stride;
      std::vector<std::uint64_t> indices(count);
      for (std::uint64_t k = 0; k < count; ++k) indices[k] = k * stride;
      return PointSet::from_indices(q, s, std::move(indices));
    }
    case GeneratorKind::ProductInterval: {
      if (spec.length < 1 || spec.length > q) {
        throw Error(Errc::BadGenerator, "product_interval length " +
                                            std::to_string(spec.length) + " not in [1, q]");
      }
      std::vector<std::uint64_t> indices;
      std::vector<FieldElement> x(static_cast<std::size_t>(s));
      for (std::uint64_t i = 0; i < shape.size; ++i) {
        shape.decode(i, x);
        if (std::all_of(x.begin(), x.end(), [&](FieldElement c) { return c < spec.length; })) {
          indices.push_back(i);
        }
      }
      return PointSet::from_indices(q, s, std::move(indices));
    }
    case GeneratorKind::FromFile: {
      PointSet set = read_pointset(spec.path);
      if (set.q() != q || set.s() != s) {
        throw Error(Errc::FieldMismatch, spec.path + " holds a set over F_" +
                                             std::to_string(set.q()) + "^" +
                                             std::to_string(set.s()));
      }
      return set;
    }
  }
  throw Error(Errc::BadGenerator, "unknown generator");
}

}  // namespace fqdist
