#ifndef NFORGE_CURVE_INVARIANTS_HPP
#define NFORGE_CURVE_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "nforge/curve.hpp"
#include "nforge/semigroup_ops.hpp"

namespace nforge {

struct PointInvariants {
  std::vector<Rat> fiber;
  GoodSemigroup semigroup;
  long delta = 0;
  long eta = 0;
  std::optional<long> mu;
  long dim_O_mod_conductor = 0;  // dim(O_P / C_P)
  bool gorenstein = false;
  bool kunz = false;
};

/// Global invariants of a rational curve model: g = sum of deltas, eta and
/// mu totals, conductor codimension, the Gorenstein-type flags, and the
/// degree correction used by the embedding-dimension formulas.
struct CurveInvariants {
  long genus = 0;
  long eta = 0;
  std::optional<long> mu;  // reported when the nonhyperelliptic check passes
  long h0_O_mod_conductor = 0;
  bool nearly_normal = false;
  std::optional<bool> nearly_gorenstein;
  /// True/false when decidable at this layer (exact for a single unibranch
  /// fiber); otherwise left unset for the pencil search to fill.
  std::optional<bool> nonhyperelliptic;
  /// Sum over non-Gorenstein points of |beta_P| - delta_P; the quantity the
  /// embedding-dimension count actually uses.
  long rho_minus_sigma = 0;
  /// The literal sheaf-theoretic difference, surfaced when it disagrees.
  long rho_minus_sigma_literal = 0;
  std::vector<PointInvariants> points;
};

CurveInvariants curve_invariants(const CurveSpec& curve);

/// dim(O_P/C_P) as a saturated-chain length from 0 to the conductor.
long dim_O_mod_conductor(const GoodSemigroup& S);

}  // namespace nforge

#endif
