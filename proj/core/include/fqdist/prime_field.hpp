#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fqdist {

using Complex = std::complex<double>;

// An element of F_q, always held reduced into [0, q).
using FieldElement = std::uint32_t;

// Arithmetic context for the prime field F_q, q an odd prime.
//
// All tables are built once at construction; the context is immutable
// afterwards and may be shared freely between threads. Every evaluation of
// the additive character goes through the table, so equal arguments yield
// bit-identical values.
class FieldContext {
 public:
  static constexpr std::uint32_t kDefaultModulusCap = 1u << 20;

  // Throws Error{ModulusTooSmall, ModulusTooLarge, EvenModulus, CompositeModulus}.
  explicit FieldContext(std::int64_t q, std::int64_t modulus_cap = kDefaultModulusCap);

  std::uint32_t q() const noexcept { return q_; }

  FieldElement reduce(std::int64_t a) const noexcept {
    std::int64_t r = a % static_cast<std::int64_t>(q_);
    return static_cast<FieldElement>(r < 0 ? r + q_ : r);
  }
  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    std::uint32_t r = a + b;
    return r >= q_ ? r - q_ : r;
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept {
    return a >= b ? a - b : a + q_ - b;
  }
  FieldElement neg(FieldElement a) const noexcept { return a == 0 ? 0 : q_ - a; }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    return static_cast<FieldElement>(static_cast<std::uint64_t>(a) * b % q_);
  }
  FieldElement square(FieldElement a) const noexcept { return mul(a, a); }

  // Multiplicative inverse; throws Error{ZeroInverse} for a = 0.
  FieldElement inverse(FieldElement a) const;

  // Legendre symbol with the convention eta(0) = 0.
  int quadratic_character(FieldElement a) const noexcept { return eta_[a]; }

  // The smaller of the two square roots, or nullopt for a nonsquare.
  std::optional<FieldElement> sqrt_mod(FieldElement a) const noexcept;

  // e(j/q) = exp(2 pi i j / q).
  const Complex& additive_character(FieldElement j) const noexcept { return chars_[j]; }
  std::span<const Complex> characters() const noexcept { return chars_; }

 private:
  static constexpr FieldElement kNoRoot = 0xffffffffu;

  std::uint32_t q_;
  std::vector<FieldElement> inv_;   // inv_[0] unused
  std::vector<int> eta_;
  std::vector<FieldElement> sqrt_;  // kNoRoot for nonsquares
  std::vector<Complex> chars_;
};

inline FieldContext make_field(std::int64_t q,
                               std::int64_t modulus_cap = FieldContext::kDefaultModulusCap) {
  return FieldContext(q, modulus_cap);
}

bool is_prime(std::int64_t n) noexcept;

}  // namespace fqdist
