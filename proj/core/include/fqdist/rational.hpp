#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace fqdist {

// Nonnegative exact fraction, kept in lowest terms.
class Rational {
 public:
  using Int = unsigned __int128;

  Rational(Int num, Int den);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }
  double to_double() const noexcept;
  std::string str() const;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;
  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Int num_;
  Int den_;
};

std::string to_string_u128(unsigned __int128 v);

}  // namespace fqdist
