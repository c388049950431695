#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fqdist/grid.hpp"

namespace fqdist {

// A duplicate-free subset of F_q^s, canonically sorted by grid index.
class PointSet {
 public:
  PointSet() = default;

  // Throws DuplicatePoint / CoordinateOutOfRange / CapExceeded (q^s overflow).
  static PointSet from_points(std::uint32_t q, int s,
                              const std::vector<std::vector<FieldElement>>& points);
  static PointSet from_indices(std::uint32_t q, int s, std::vector<std::uint64_t> indices);

  const Shape& shape() const noexcept { return shape_; }
  std::uint32_t q() const noexcept { return shape_.q; }
  int s() const noexcept { return shape_.s; }
  std::uint64_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }

  std::span<const std::uint64_t> indices() const noexcept { return indices_; }
  // Coordinates of point i.
  std::span<const FieldElement> point(std::uint64_t i) const noexcept {
    return {coords_.data() + i * static_cast<std::uint64_t>(shape_.s),
            static_cast<std::size_t>(shape_.s)};
  }
  std::span<const FieldElement> coords() const noexcept { return coords_; }

  bool contains(std::uint64_t index) const noexcept;

  bool operator==(const PointSet& other) const noexcept {
    return shape_ == other.shape_ && indices_ == other.indices_;
  }

 private:
  PointSet(Shape shape, std::vector<std::uint64_t> sorted_unique);

  Shape shape_;
  std::vector<std::uint64_t> indices_;
  std::vector<FieldElement> coords_;
};

}  // namespace fqdist
