#include "fqdist/pointset.hpp"

#include <algorithm>
#include <string>

#include "fqdist/error.hpp"

namespace fqdist {

PointSet::PointSet(Shape shape, std::vector<std::uint64_t> sorted_unique)
    : shape_(shape), indices_(std::move(sorted_unique)) {
  coords_.resize(indices_.size() * static_cast<std::size_t>(shape_.s));
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    shape_.decode(indices_[i], std::span<FieldElement>(coords_.data() + i * shape_.s,
                                                       static_cast<std::size_t>(shape_.s)));
  }
}

PointSet PointSet::from_points(std::uint32_t q, int s,
                               const std::vector<std::vector<FieldElement>>& points) {
  Shape shape = Shape::make(q, s);
  std::vector<std::uint64_t> indices;
  indices.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (p.size() != static_cast<std::size_t>(s)) {
      throw Error(Errc::ParseError, "point " + std::to_string(i) + " has " +
                                        std::to_string(p.size()) + " coordinates, expected " +
                                        std::to_string(s));
    }
    for (FieldElement c : p) {
      if (c >= q) {
        throw Error(Errc::CoordinateOutOfRange, "point " + std::to_string(i) + ": coordinate " +
                                                    std::to_string(c) + " not in [0, " +
                                                    std::to_string(q) + ")");
      }
    }
    indices.push_back(shape.encode(p));
  }
  return from_indices(q, s, std::move(indices));
}

PointSet PointSet::from_indices(std::uint32_t q, int s, std::vector<std::uint64_t> indices) {
  Shape shape = Shape::make(q, s);
  std::sort(indices.begin(), indices.end());
  auto dup = std::adjacent_find(indices.begin(), indices.end());
  if (dup != indices.end()) {
    throw Error(Errc::DuplicatePoint, "grid index " + std::to_string(*dup) + " appears twice");
  }
  if (!indices.empty() && indices.back() >= shape.size) {
    throw Error(Errc::CoordinateOutOfRange,
                "grid index " + std::to_string(indices.back()) + " outside q^s");
  }
  return PointSet(shape, std::move(indices));
}

bool PointSet::contains(std::uint64_t index) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

}  // namespace fqdist
