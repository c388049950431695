#pragma once

// Test-only reference computations. None of these touch the library's
// character table or transform code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

using C = std::complex<double>;

inline C e(std::int64_t x, std::int64_t q) {
  std::int64_t r = ((x % q) + q) % q;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q));
}

inline std::int64_t powmod(std::int64_t a, std::int64_t k, std::int64_t q) {
  std::int64_t out = 1;
  a = ((a % q) + q) % q;
  while (k > 0) {
    if (k & 1) out = out * a % q;
    a = a * a % q;
    k >>= 1;
  }
  return out;
}

// Euler's criterion.
inline int eta(std::int64_t a, std::int64_t q) {
  a = ((a % q) + q) % q;
  if (a == 0) return 0;
  return powmod(a, (q - 1) / 2, q) == 1 ? 1 : -1;
}

inline std::int64_t inv(std::int64_t a, std::int64_t q) { return powmod(a, q - 2, q); }

inline std::vector<std::int64_t> decode(std::uint64_t idx, std::int64_t q, int s) {
  std::vector<std::int64_t> x(static_cast<std::size_t>(s));
  for (int i = s - 1; i >= 0; --i) {
    x[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(q));
    idx /= static_cast<std::uint64_t>(q);
  }
  return x;
}

inline std::uint64_t grid_size(std::int64_t q, int s) {
  std::uint64_t n = 1;
  for (int i = 0; i < s; ++i) n *= static_cast<std::uint64_t>(q);
  return n;
}

// f^(m) = q^{-s} sum_x e(-m.x/q) f(x), as the literal O(q^{2s}) double sum.
inline std::vector<C> literal_dft(const std::vector<C>& f, std::int64_t q, int s) {
  const std::uint64_t n = grid_size(q, s);
  std::vector<C> out(n);
  for (std::uint64_t mi = 0; mi < n; ++mi) {
    auto m = decode(mi, q, s);
    C acc = 0;
    for (std::uint64_t xi = 0; xi < n; ++xi) {
      auto x = decode(xi, q, s);
      std::int64_t dot = 0;
      for (int i = 0; i < s; ++i) dot += m[i] * x[i];
      acc += e(-dot, q) * f[xi];
    }
    out[mi] = acc / static_cast<double>(n);
  }
  return out;
}

inline std::int64_t norm(const std::vector<std::int64_t>& x, std::int64_t q) {
  std::int64_t n = 0;
  for (auto v : x) n += v * v;
  return n % q;
}

// S^_r(m) straight from the definition.
inline C sphere_hat(std::int64_t q, int s, std::int64_t r, const std::vector<std::int64_t>& m) {
  const std::uint64_t n = grid_size(q, s);
  C acc = 0;
  for (std::uint64_t xi = 0; xi < n; ++xi) {
    auto x = decode(xi, q, s);
    if (norm(x, q) != ((r % q) + q) % q) continue;
    std::int64_t dot = 0;
    for (int i = 0; i < s; ++i) dot += m[i] * x[i];
    acc += e(-dot, q);
  }
  return acc / static_cast<double>(n);
}

}  // namespace oracle
