#pragma once

#include <span>

#include "fqdist/prime_field.hpp"

namespace fqdist {

// The quadratic Gauss sum g = sum_{t != 0} eta(t) e(t/q) and its unit
// normalisation c_q = g / sqrt(q).
struct GaussData {
  Complex g;
  Complex c_q;
  int q_mod_4 = 0;
  int eta_minus_one = 0;  // eta(-1) = +1 iff q = 1 mod 4

  // The unit constant multiplying the j-sum in the closed form of the
  // sphere transform. Completing the square gives
  //   S^_r(m) = chi(m)/q + q^{-s-1} g^s sum_j e((-jr - |m|^2 4bar jbar)/q) eta^s(j),
  // and the substitution j -> -j turns this into the e(+...) form at the
  // price of eta(-1)^s. Hence the constant is (eta(-1) c_q)^s = conj(c_q)^s,
  // which differs from c_q^s exactly when s is odd and q = 3 mod 4.
  Complex sphere_constant(int s) const;
};

GaussData gauss_data(const FieldContext& ctx);

// K(a, b) = sum_{t in F_q^*} e((a t + b tbar) / q), by direct summation.
Complex kloosterman(const FieldContext& ctx, FieldElement a, FieldElement b);

// Salie sum: sum_{t in F_q^*} eta(t) e((a t + b tbar) / q), by direct summation.
Complex salie(const FieldContext& ctx, FieldElement a, FieldElement b);

// Closed-form Fourier transform of the sphere S_r = {x : |x|^2 = r}, in the
// q^{-s} normalisation used throughout. S^_r(m) only depends on m through
// (m == 0, |m|^2), so the kernel is evaluated on that pair; each evaluation
// is a literal O(q) sum over the character table.
class SphereKernel {
 public:
  SphereKernel(const FieldContext& ctx, int s);

  int dimension() const noexcept { return s_; }
  const GaussData& gauss() const noexcept { return gauss_; }

  Complex value(FieldElement r, bool m_is_zero, FieldElement norm_m) const;

  // sum_{j != 0} e((j r + norm_m 4bar jbar)/q) eta^s(j)
  Complex j_sum(FieldElement r, FieldElement norm_m) const;

  // q^{-s/2-1} * sphere_constant(s)
  Complex prefactor() const noexcept { return prefactor_; }

 private:
  const FieldContext* ctx_;
  int s_;
  GaussData gauss_;
  FieldElement inv4_;
  Complex prefactor_;
};

Complex sphere_fourier_closed(const FieldContext& ctx, int s, FieldElement r,
                              std::span<const FieldElement> m);

}  // namespace fqdist
