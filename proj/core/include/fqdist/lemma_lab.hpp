#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fqdist/distance.hpp"
#include "fqdist/grid.hpp"
#include "fqdist/pointset.hpp"
#include "fqdist/prime_field.hpp"

namespace fqdist {

enum class LemmaId {
  Von1717,    // sum_r sigma_F(r) = q^{-s} #F
  Insel,      // spectral formula for nu(j)
  Fueller,    // nu(0) <= (21/30) #E #F when #E #F >= 900 q^s
  Rollei,     // second-moment bound for nu
  Montblanc,  // |sigma_{E,F}(0)|^2 = q^{-3s} nu(0)^2 + O(...) for even s
  Tavanic,    // averaged bound on sigma_E sigma_F
  Karte,      // pointwise bound on sigma_E(r)
  Zoff,       // bounds on the sphere transform
  Theorem,    // lower bound for #Delta(E, F)
  Tourist,    // bound on sum_{r != 0} nu(r)^2
};

std::string_view lemma_name(LemmaId id) noexcept;
std::optional<LemmaId> parse_lemma(std::string_view name) noexcept;
const std::vector<LemmaId>& all_lemmas() noexcept;

struct LemmaReport {
  std::string lemma_id;
  bool hypothesis_met = false;
  double lhs = 0.0;
  std::vector<std::pair<std::string, double>> rhs_terms;
  // Present only when a concrete constant is asserted.
  std::optional<bool> explicit_pass;
  // lhs over the constant-free envelope, for bounds with unstated constants.
  std::optional<double> measured_constant;
  std::string notes;

  std::optional<double> term(std::string_view name) const;
};

// Everything the checkers need about one (E, F) pair, computed once.
struct PairAnalysis {
  const FieldContext* ctx = nullptr;
  int s = 0;
  PointSet e;
  PointSet f;
  Spectrum e_hat;
  Spectrum f_hat;
  SphericalProfile sigma_e;
  SphericalProfile sigma_f;
  SphericalProfile sigma_ef;
  DistanceDistribution nu;  // exact
  bool nu_from_brute = false;
  std::uint64_t intersection = 0;
  Caps caps;
};

// nu comes from the literal double loop when #E #F fits the pair cap and
// from the spectral path otherwise.
PairAnalysis analyze_pair(const FieldContext& ctx, PointSet e, PointSet f, const Caps& caps = {});

struct DyadicLevel {
  int i = 0;
  double t = 0.0;  // T_i = sum over members of sigma_E sigma_F
  std::uint64_t members = 0;
};

// Dyadic pigeonholing of r in F_q^* by the value of sigma_F(r).
//
// Level i holds the r with 2^{i-1} < sigma_F(r) <= 2^i, for integer i in
// [ceil(-4s log2 q), 0]; values at or below 2^{i_min - 1} fall under the
// floor and are paid for by the slack term q^{-4s+1}.
struct DyadicDecomposition {
  std::vector<DyadicLevel> levels;  // ascending i
  std::optional<int> chosen_level;  // argmax_i T_i over occupied levels
  std::vector<FieldElement> m;      // members of the chosen level
  double a = 0.0;                   // 2^{chosen - 1}
  double total = 0.0;               // sum_{r != 0} sigma_E sigma_F
  double floor_term = 0.0;          // q^{-4s+1}
  std::uint64_t below_floor = 0;

  bool pigeonhole_ok = false;  // total <= floor_term + #levels * max T_i
  bool band_ok = false;  // A <= sigma_F <= 2A on M
  bool square_sum_ok = false;  // sum_M sigma_F^2 <= 4 #M A^2
  bool pair_sum_ok = false;  // #M^2 A^2 <= sum_{m,n in M} sigma_F(m) sigma_F(n)
  double spd_gap = 0.0;        // |q^{-2s} #F^2 - (sum_r sigma_F(r))^2|
};

DyadicDecomposition dyadic_decompose(const SphericalProfile& sigma_f,
                                     const SphericalProfile& sigma_e, std::uint64_t size_f);

LemmaReport check_von1717(const FieldContext& ctx, const SphericalProfile& sigma,
                          std::uint64_t size);
LemmaReport check_von1717(const FieldContext& ctx, const PointSet& set, const Caps& caps = {});
LemmaReport check_insel(const PairAnalysis& pair);
LemmaReport check_fueller(const PairAnalysis& pair);
LemmaReport check_rollei(const PairAnalysis& pair);
// Throws OddDimension for odd s.
LemmaReport check_montblanc(const PairAnalysis& pair);
LemmaReport check_tavanic(const PairAnalysis& pair);
LemmaReport check_karte(const FieldContext& ctx, const SphericalProfile& sigma,
                        std::uint64_t size);
LemmaReport check_karte(const FieldContext& ctx, const PointSet& set, const Caps& caps = {});
LemmaReport check_zoff(const FieldContext& ctx, int s, const Caps& caps = {});
LemmaReport check_theorem(const PairAnalysis& pair);
LemmaReport check_tourist(const PairAnalysis& pair);

// Dispatches by id. Single-set lemmas use F (von1717) or E (karte); zoff
// ignores the sets.
LemmaReport run_check(LemmaId id, const PairAnalysis& pair);

}  // namespace fqdist
