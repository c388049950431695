#pragma once

#include <cstdint>
#include <vector>

#include "fqdist/grid.hpp"
#include "fqdist/pointset.hpp"
#include "fqdist/prime_field.hpp"
#include "fqdist/rational.hpp"

namespace fqdist {

// nu[j] = #{(x, y) in E x F : |x - y|^2 = j}.
struct DistanceDistribution {
  std::vector<std::uint64_t> nu;
  std::uint64_t size_e = 0;
  std::uint64_t size_f = 0;
  // max_j |nu_j(float) - round(nu_j)| for spectral construction; 0 for brute.
  double rounding_residual = 0.0;

  std::uint64_t mass() const noexcept;
  unsigned __int128 second_moment() const noexcept;          // sum_j nu_j^2
  unsigned __int128 second_moment_offzero() const noexcept;  // sum_{j != 0} nu_j^2
};

// Spherical averages of Fourier transforms, indexed by r in F_q.
//   single_set: sigma_E(r)    = sum_{|a|^2 = r} |E^(a)|^2        (real, >= 0)
//   cross:      sigma_{E,F}(r) = sum_{|m|^2 = r} conj(E^(m)) F^(m)
struct SphericalProfile {
  enum class Kind { SingleSet, Cross };

  Kind kind = Kind::SingleSet;
  std::uint32_t q = 0;
  int s = 0;
  std::vector<Complex> values;

  double real(FieldElement r) const noexcept { return values[r].real(); }
  Complex sum() const noexcept;
};

GridFunction indicator(const PointSet& set, const Caps& caps = {});

// forward_transform of the 0/1 indicator of the set.
Spectrum set_spectrum(const FieldContext& ctx, const PointSet& set, const Caps& caps = {});

// Literal double loop over E x F. Throws PairCapExceeded, FieldMismatch.
DistanceDistribution nu_brute(const FieldContext& ctx, const PointSet& e, const PointSet& f,
                              const Caps& caps = {});

// nu(j) = q^{2s} sum_m S^_j(m) conj(E^(m)) F^(m), for all j at once.
//
// S^_j(m) depends on m only through |m|^2 (and m == 0), so the cross
// spectrum is bucketed into sigma_{E,F} first and the j-dependence is
// carried by e(jk/q); the assembly costs O(q^2) after the two transforms.
// Throws RoundingDrift if any value sits further than 1e-6 from an integer.
DistanceDistribution nu_spectral(const FieldContext& ctx, const PointSet& e, const PointSet& f,
                                 const Caps& caps = {});
DistanceDistribution nu_from_spectra(const FieldContext& ctx, const Spectrum& e_hat,
                                     const Spectrum& f_hat, std::uint64_t size_e,
                                     std::uint64_t size_f);

inline constexpr double kRoundingTolerance = 1e-6;

// { j : nu[j] > 0 }, ascending.
std::vector<FieldElement> distance_set(const DistanceDistribution& nu);

SphericalProfile spherical_profile(const FieldContext& ctx, const PointSet& e,
                                   const Caps& caps = {});
SphericalProfile cross_profile(const FieldContext& ctx, const PointSet& e, const PointSet& f,
                               const Caps& caps = {});
SphericalProfile profile_from_spectrum(const FieldContext& ctx, const Spectrum& e_hat);
SphericalProfile cross_profile_from_spectra(const FieldContext& ctx, const Spectrum& e_hat,
                                            const Spectrum& f_hat);

// #(E n F) by merging the sorted index lists. Throws FieldMismatch.
std::uint64_t intersection_count(const PointSet& e, const PointSet& f);
// q^s * Re sum_m conj(E^(m)) F^(m); equals #(E n F) up to rounding.
double intersection_count_spectral(const Spectrum& e_hat, const Spectrum& f_hat);

// (sum_{j != 0} nu_j)^2 / sum_{j != 0} nu_j^2, a lower bound for the number of
// nonzero distances by Cauchy-Schwarz. Throws EmptyOffzeroSupport.
Rational support_lower_bound(const DistanceDistribution& nu);

// Right-hand side of the exact second-moment identity
//   sum_j nu_j^2 = (#E #F)^2 / q + q^{3s} sum_r |sigma_{E,F}(r)|^2 - q^{s-1} #(E n F)^2.
double second_moment_identity_rhs(const SphericalProfile& cross, std::uint64_t size_e,
                                  std::uint64_t size_f, std::uint64_t intersection);

void require_same_field(const PointSet& e, const PointSet& f);

}  // namespace fqdist
