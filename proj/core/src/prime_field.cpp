#include "fqdist/prime_field.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fqdist/error.hpp"

namespace fqdist {

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldContext::FieldContext(std::int64_t q, std::int64_t modulus_cap) {
  if (q < 3) throw Error(Errc::ModulusTooSmall, "q = " + std::to_string(q) + " < 3");
  if (q > modulus_cap) {
    throw Error(Errc::ModulusTooLarge,
                "q = " + std::to_string(q) + " exceeds cap " + std::to_string(modulus_cap));
  }
  if (q % 2 == 0) throw Error(Errc::EvenModulus, "q = " + std::to_string(q) + " is even");
  if (!is_prime(q)) throw Error(Errc::CompositeModulus, "q = " + std::to_string(q));

  q_ = static_cast<std::uint32_t>(q);

  // Inverses by the recurrence inv[a] = -(q / a) * inv[q mod a].
  inv_.assign(q_, 0);
  inv_[1] = 1;
  for (std::uint32_t a = 2; a < q_; ++a) {
    inv_[a] = mul(q_ - q_ / a, inv_[q_ % a]);
  }

  // Roots r <= (q-1)/2 visit every nonzero square exactly once, and each is
  // the smaller representative of its pair {r, q - r}.
  sqrt_.assign(q_, kNoRoot);
  eta_.assign(q_, -1);
  sqrt_[0] = 0;
  eta_[0] = 0;
  for (std::uint32_t r = 1; r <= (q_ - 1) / 2; ++r) {
    FieldElement sq = square(r);
    sqrt_[sq] = r;
    eta_[sq] = 1;
  }

  chars_.resize(q_);
  chars_[0] = Complex(1.0, 0.0);
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (std::uint32_t j = 1; j <= q_ / 2; ++j) {
    long double angle = two_pi * static_cast<long double>(j) / static_cast<long double>(q_);
    Complex c(static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle)));
    chars_[j] = c;
    chars_[q_ - j] = std::conj(c);
  }
}

FieldElement FieldContext::inverse(FieldElement a) const {
  if (a % q_ == 0) throw Error(Errc::ZeroInverse, "0 has no inverse mod " + std::to_string(q_));
  return inv_[a % q_];
}

std::optional<FieldElement> FieldContext::sqrt_mod(FieldElement a) const noexcept {
  FieldElement r = sqrt_[a % q_];
  if (r == kNoRoot) return std::nullopt;
  return r;
}

}  // namespace fqdist
