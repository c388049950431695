#include "fqdist/rational.hpp"

#include <algorithm>

#include "fqdist/error.hpp"

namespace fqdist {
namespace {

Rational::Int gcd(Rational::Int a, Rational::Int b) {
  while (b != 0) {
    Rational::Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Compares a/b with c/d without overflow via the continued-fraction walk.
std::strong_ordering compare(Rational::Int a, Rational::Int b, Rational::Int c, Rational::Int d) {
  bool flipped = false;
  for (;;) {
    Rational::Int qa = a / b, qc = c / d;
    if (qa != qc) {
      auto r = qa < qc ? std::strong_ordering::less : std::strong_ordering::greater;
      if (!flipped) return r;
      return r == std::strong_ordering::less ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
    }
    Rational::Int ra = a % b, rc = c % d;
    if (ra == 0 && rc == 0) return std::strong_ordering::equal;
    if (ra == 0) return flipped ? std::strong_ordering::greater : std::strong_ordering::less;
    if (rc == 0) return flipped ? std::strong_ordering::less : std::strong_ordering::greater;
    // a/b - qa = ra/b; compare ra/b with rc/d  <=>  compare d/rc with b/ra, reversed.
    a = b;
    b = ra;
    c = d;
    d = rc;
    flipped = !flipped;
  }
}

}  // namespace

Rational::Rational(Int num, Int den) {
  if (den == 0) throw Error(Errc::ConfigError, "rational with zero denominator");
  Int g = gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

double Rational::to_double() const noexcept {
  return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string Rational::str() const {
  if (den_ == 1) return to_string_u128(num_);
  return to_string_u128(num_) + "/" + to_string_u128(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  return compare(a.num_, a.den_, b.num_, b.den_);
}

std::string to_string_u128(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace fqdist
