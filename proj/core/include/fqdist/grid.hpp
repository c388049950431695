#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fqdist/prime_field.hpp"

namespace fqdist {

// Desk-scale limits. Grids hold q^s dense complex values; the pair cap bounds
// the literal E x F double loop.
struct Caps {
  static constexpr std::uint64_t kDefaultGrid = std::uint64_t{1} << 22;
  static constexpr std::uint64_t kDefaultPairs = 1'000'000'000;

  std::uint64_t grid = kDefaultGrid;
  std::uint64_t pairs = kDefaultPairs;
};

// The group F_q^s. Points are encoded radix-q, row-major: the last
// coordinate varies fastest.
struct Shape {
  std::uint32_t q = 0;
  int s = 0;
  std::uint64_t size = 0;  // q^s

  // Throws CapExceeded when q^s > cap (or overflows 64 bits).
  static Shape make(std::uint32_t q, int s, std::uint64_t cap = UINT64_MAX);

  std::uint64_t encode(std::span<const FieldElement> x) const noexcept;
  void decode(std::uint64_t index, std::span<FieldElement> out) const noexcept;

  bool operator==(const Shape&) const = default;
};

// |x|^2 for every grid index, in encoding order.
std::vector<FieldElement> norm_table(const FieldContext& ctx, const Shape& shape);

struct SpaceDomain {};
struct FrequencyDomain {};

// Dense complex function on F_q^s. The domain tag keeps space-side and
// frequency-side grids apart at compile time.
template <class Domain>
class Grid {
 public:
  Grid() = default;
  explicit Grid(Shape shape) : shape_(shape), values_(shape.size) {}
  Grid(Shape shape, std::vector<Complex> values) : shape_(shape), values_(std::move(values)) {}

  const Shape& shape() const noexcept { return shape_; }
  std::uint32_t q() const noexcept { return shape_.q; }
  int s() const noexcept { return shape_.s; }
  std::uint64_t size() const noexcept { return shape_.size; }

  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }
  std::vector<Complex> release() && { return std::move(values_); }

  const Complex& operator[](std::uint64_t i) const noexcept { return values_[i]; }
  Complex& operator[](std::uint64_t i) noexcept { return values_[i]; }

 private:
  Shape shape_;
  std::vector<Complex> values_;
};

using GridFunction = Grid<SpaceDomain>;
using Spectrum = Grid<FrequencyDomain>;

}  // namespace fqdist
