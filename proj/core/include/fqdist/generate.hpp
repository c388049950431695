#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fqdist/pointset.hpp"
#include "fqdist/prime_field.hpp"

namespace fqdist {

enum class GeneratorKind {
  UniformRandom,   // `size` distinct points, uniformly without replacement
  IsotropicLine,   // {(x, i x)} with i^2 = -1; needs q = 1 mod 4, s = 2
  SphereSet,       // S_radius, or a random `size`-subset of it when size > 0
  Subspace,        // {x : x_k = ... = x_s = 0}, keeping the first `dim` coordinates
  ProductInterval, // {0, ..., length-1}^s
  FromFile,
};

std::string_view generator_name(GeneratorKind kind) noexcept;
std::optional<GeneratorKind> parse_generator(std::string_view name) noexcept;

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::UniformRandom;
  std::uint64_t size = 0;
  std::uint64_t seed = 0;
  FieldElement radius = 0;
  int dim = 1;
  std::uint32_t length = 1;
  std::string path;

  static GeneratorSpec uniform_random(std::uint64_t size, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.size = size;
    spec.seed = seed;
    return spec;
  }
};

// Deterministic given (q, s, spec). Throws BadGenerator, SizeTooLarge.
PointSet generate(const FieldContext& ctx, int s, const GeneratorSpec& spec);

// Counter-based stream: value n is splitmix64(seed + n * golden-gamma), so
// any draw can be reproduced without replaying the stream.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}
  std::uint64_t next() noexcept;
  // Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Stable per-trial seed from (master, q, s, trial, role), role 'E' or 'F'.
std::uint64_t trial_seed(std::uint64_t master, std::uint32_t q, int s, std::uint64_t trial,
                         char role) noexcept;

}  // namespace fqdist
