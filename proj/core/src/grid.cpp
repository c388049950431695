#include "fqdist/grid.hpp"

#include <string>

#include "fqdist/error.hpp"

namespace fqdist {

Shape Shape::make(std::uint32_t q, int s, std::uint64_t cap) {
  if (s < 1) throw Error(Errc::ConfigError, "dimension s = " + std::to_string(s) + " < 1");
  std::uint64_t size = 1;
  for (int i = 0; i < s; ++i) {
    if (size > cap / q) {
      throw Error(Errc::CapExceeded, "q^s = " + std::to_string(q) + "^" + std::to_string(s) +
                                         " exceeds grid cap " + std::to_string(cap));
    }
    size *= q;
  }
  return Shape{q, s, size};
}

std::uint64_t Shape::encode(std::span<const FieldElement> x) const noexcept {
  std::uint64_t index = 0;
  for (FieldElement c : x) index = index * q + c;
  return index;
}

void Shape::decode(std::uint64_t index, std::span<FieldElement> out) const noexcept {
  for (int i = s - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<FieldElement>(index % q);
    index /= q;
  }
}

std::vector<FieldElement> norm_table(const FieldContext& ctx, const Shape& shape) {
  std::vector<FieldElement> norms(shape.size);
  std::vector<FieldElement> squares(shape.q);
  for (FieldElement x = 0; x < shape.q; ++x) squares[x] = ctx.square(x);
  // index = prefix * q + last, so |index|^2 = |prefix|^2 + last^2.
  for (std::uint64_t i = 0; i < shape.size; ++i) {
    FieldElement last = static_cast<FieldElement>(i % shape.q);
    FieldElement prefix_norm = i < shape.q ? 0 : norms[i / shape.q];
    norms[i] = ctx.add(prefix_norm, squares[last]);
  }
  return norms;
}

}  // namespace fqdist
