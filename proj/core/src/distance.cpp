#include "fqdist/distance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fqdist/charsums.hpp"
#include "fqdist/error.hpp"
#include "fqdist/spectral.hpp"

namespace fqdist {
namespace {

double int_power(double base, int exp) {
  double out = 1.0;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

void require_same_shape(const Spectrum& a, const Spectrum& b) {
  if (!(a.shape() == b.shape())) {
    throw Error(Errc::FieldMismatch, "spectra over different (q, s)");
  }
}

}  // namespace

std::uint64_t DistanceDistribution::mass() const noexcept {
  std::uint64_t total = 0;
  for (std::uint64_t v : nu) total += v;
  return total;
}

unsigned __int128 DistanceDistribution::second_moment() const noexcept {
  unsigned __int128 total = 0;
  for (std::uint64_t v : nu) total += static_cast<unsigned __int128>(v) * v;
  return total;
}

unsigned __int128 DistanceDistribution::second_moment_offzero() const noexcept {
  unsigned __int128 total = second_moment();
  if (!nu.empty()) total -= static_cast<unsigned __int128>(nu[0]) * nu[0];
  return total;
}

Complex SphericalProfile::sum() const noexcept {
  Complex total(0.0, 0.0);
  for (const Complex& v : values) total += v;
  return total;
}

void require_same_field(const PointSet& e, const PointSet& f) {
  if (e.q() != f.q() || e.s() != f.s()) {
    throw Error(Errc::FieldMismatch, "E over F_" + std::to_string(e.q()) + "^" +
                                         std::to_string(e.s()) + ", F over F_" +
                                         std::to_string(f.q()) + "^" + std::to_string(f.s()));
  }
}

GridFunction indicator(const PointSet& set, const Caps& caps) {
  Shape shape = Shape::make(set.q(), set.s(), caps.grid);
  GridFunction out(shape);
  for (std::uint64_t idx : set.indices()) out[idx] = 1.0;
  return out;
}

Spectrum set_spectrum(const FieldContext& ctx, const PointSet& set, const Caps& caps) {
  return forward_transform(ctx, indicator(set, caps), caps);
}

DistanceDistribution nu_brute(const FieldContext& ctx, const PointSet& e, const PointSet& f,
                              const Caps& caps) {
  require_same_field(e, f);
  const std::uint64_t pairs = e.size() * f.size();
  if (f.size() != 0 && (pairs / f.size() != e.size() || pairs > caps.pairs)) {
    throw Error(Errc::PairCapExceeded, std::to_string(e.size()) + " x " +
                                           std::to_string(f.size()) + " pairs exceed cap " +
                                           std::to_string(caps.pairs));
  }
  const std::uint32_t q = ctx.q();
  const int s = e.s();
  // diff_sq[d + q] = d^2 mod q for d in (-q, q).
  std::vector<std::uint32_t> diff_sq(2 * static_cast<std::size_t>(q));
  for (std::uint32_t i = 0; i < 2 * q; ++i) diff_sq[i] = ctx.square(i >= q ? i - q : i);

  std::vector<std::uint64_t> counts(q, 0);
  const FieldElement* ec = e.coords().data();
  const FieldElement* fc = f.coords().data();
  for (std::uint64_t a = 0; a < e.size(); ++a) {
    const FieldElement* x = ec + a * s;
    for (std::uint64_t b = 0; b < f.size(); ++b) {
      const FieldElement* y = fc + b * s;
      std::uint64_t n = 0;
      for (int i = 0; i < s; ++i) n += diff_sq[x[i] + q - y[i]];
      ++counts[n % q];
    }
  }
  return DistanceDistribution{std::move(counts), e.size(), f.size(), 0.0};
}

DistanceDistribution nu_from_spectra(const FieldContext& ctx, const Spectrum& e_hat,
                                     const Spectrum& f_hat, std::uint64_t size_e,
                                     std::uint64_t size_f) {
  require_same_shape(e_hat, f_hat);
  const std::uint32_t q = ctx.q();
  const int s = e_hat.s();
  SphericalProfile sigma = cross_profile_from_spectra(ctx, e_hat, f_hat);
  const Complex a0 = std::conj(e_hat[0]) * f_hat[0];

  SphereKernel kernel(ctx, s);
  const FieldElement inv4 = ctx.inverse(4 % q);

  // weighted[k] = eta^s(k) sum_r sigma(r) e(r 4bar kbar / q), k != 0
  std::vector<Complex> weighted(q, Complex(0.0, 0.0));
  for (FieldElement k = 1; k < q; ++k) {
    const FieldElement step = ctx.mul(inv4, ctx.inverse(k));
    Complex acc(0.0, 0.0);
    FieldElement phase = 0;
    for (FieldElement r = 0; r < q; ++r) {
      acc += sigma.values[r] * ctx.additive_character(phase);
      phase = ctx.add(phase, step);
    }
    if (s % 2 == 1) acc *= static_cast<double>(ctx.quadratic_character(k));
    weighted[k] = acc;
  }

  const double q2s = int_power(static_cast<double>(q), 2 * s);
  const Complex prefactor = kernel.prefactor();
  DistanceDistribution out{std::vector<std::uint64_t>(q, 0), size_e, size_f, 0.0};
  double residual = 0.0;
  for (FieldElement j = 0; j < q; ++j) {
    Complex acc(0.0, 0.0);
    FieldElement phase = j;
    for (FieldElement k = 1; k < q; ++k) {
      acc += ctx.additive_character(phase) * weighted[k];
      phase = ctx.add(phase, j);
    }
    const Complex value = q2s * (a0 / static_cast<double>(q) + prefactor * acc);
    const double rounded = std::nearbyint(value.real());
    residual = std::max({residual, std::abs(value.real() - rounded), std::abs(value.imag())});
    if (rounded < 0.0) {
      throw Error(Errc::RoundingDrift, "negative count " + std::to_string(rounded) +
                                           " at j = " + std::to_string(j));
    }
    out.nu[j] = static_cast<std::uint64_t>(rounded);
  }
  out.rounding_residual = residual;
  if (residual > kRoundingTolerance) {
    throw Error(Errc::RoundingDrift, "residual " + std::to_string(residual) +
                                         " exceeds tolerance; reduce q^s");
  }
  return out;
}

DistanceDistribution nu_spectral(const FieldContext& ctx, const PointSet& e, const PointSet& f,
                                 const Caps& caps) {
  require_same_field(e, f);
  Spectrum e_hat = set_spectrum(ctx, e, caps);
  Spectrum f_hat = set_spectrum(ctx, f, caps);
  return nu_from_spectra(ctx, e_hat, f_hat, e.size(), f.size());
}

std::vector<FieldElement> distance_set(const DistanceDistribution& nu) {
  std::vector<FieldElement> out;
  for (std::size_t j = 0; j < nu.nu.size(); ++j) {
    if (nu.nu[j] > 0) out.push_back(static_cast<FieldElement>(j));
  }
  return out;
}

SphericalProfile profile_from_spectrum(const FieldContext& ctx, const Spectrum& e_hat) {
  SphericalProfile out{SphericalProfile::Kind::SingleSet, ctx.q(), e_hat.s(),
                       std::vector<Complex>(ctx.q(), Complex(0.0, 0.0))};
  std::vector<FieldElement> norms = norm_table(ctx, e_hat.shape());
  std::vector<double> acc(ctx.q(), 0.0);
  for (std::uint64_t i = 0; i < e_hat.size(); ++i) acc[norms[i]] += std::norm(e_hat[i]);
  for (FieldElement r = 0; r < ctx.q(); ++r) out.values[r] = Complex(acc[r], 0.0);
  return out;
}

SphericalProfile cross_profile_from_spectra(const FieldContext& ctx, const Spectrum& e_hat,
                                            const Spectrum& f_hat) {
  require_same_shape(e_hat, f_hat);
  SphericalProfile out{SphericalProfile::Kind::Cross, ctx.q(), e_hat.s(),
                       std::vector<Complex>(ctx.q(), Complex(0.0, 0.0))};
  std::vector<FieldElement> norms = norm_table(ctx, e_hat.shape());
  for (std::uint64_t i = 0; i < e_hat.size(); ++i) {
    out.values[norms[i]] += std::conj(e_hat[i]) * f_hat[i];
  }
  return out;
}

SphericalProfile spherical_profile(const FieldContext& ctx, const PointSet& e, const Caps& caps) {
  return profile_from_spectrum(ctx, set_spectrum(ctx, e, caps));
}

SphericalProfile cross_profile(const FieldContext& ctx, const PointSet& e, const PointSet& f,
                               const Caps& caps) {
  require_same_field(e, f);
  return cross_profile_from_spectra(ctx, set_spectrum(ctx, e, caps), set_spectrum(ctx, f, caps));
}

std::uint64_t intersection_count(const PointSet& e, const PointSet& f) {
  require_same_field(e, f);
  auto a = e.indices();
  auto b = f.indices();
  std::uint64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

double intersection_count_spectral(const Spectrum& e_hat, const Spectrum& f_hat) {
  require_same_shape(e_hat, f_hat);
  Complex total(0.0, 0.0);
  for (std::uint64_t i = 0; i < e_hat.size(); ++i) total += std::conj(e_hat[i]) * f_hat[i];
  return static_cast<double>(e_hat.size()) * total.real();
}

Rational support_lower_bound(const DistanceDistribution& nu) {
  unsigned __int128 first = 0;
  for (std::size_t j = 1; j < nu.nu.size(); ++j) first += nu.nu[j];
  if (first == 0) {
    throw Error(Errc::EmptyOffzeroSupport, "nu vanishes on every nonzero distance");
  }
  return Rational(first * first, nu.second_moment_offzero());
}

double second_moment_identity_rhs(const SphericalProfile& cross, std::uint64_t size_e,
                                  std::uint64_t size_f, std::uint64_t intersection) {
  const double q = static_cast<double>(cross.q);
  const int s = cross.s;
  const double n = static_cast<double>(size_e) * static_cast<double>(size_f);
  double energy = 0.0;
  for (const Complex& v : cross.values) energy += std::norm(v);
  const double inter = static_cast<double>(intersection);
  return n * n / q + int_power(q, 3 * s) * energy - int_power(q, s - 1) * inter * inter;
}

}  // namespace fqdist
