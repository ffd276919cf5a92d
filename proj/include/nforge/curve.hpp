#ifndef NFORGE_CURVE_HPP
#define NFORGE_CURVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "nforge/good_semigroup.hpp"
#include "nforge/poly.hpp"

namespace nforge {

/// Rational curve model: the abstract curve is P^1 with the declared
/// singular fibers imposed; t = infinity stays a smooth point (required
/// in this version).  Monomial curves are the k[t^{a_1},...,t^{a_N}]
/// models with the singularity over t = 0.
///
/// The multibranch kind prescribes the local ring of one multibranch
/// point directly: each generator lists one component per branch,
/// written in that branch's local parameter, and a product of branch
/// powers acts as the tuple of its components (so components of
/// different branches never interfere through the global coordinate).
struct CurveSpec {
  enum class Kind { monomial, parametrized, multibranch };
  Kind kind = Kind::monomial;
  std::vector<long> monomial_exponents;            // kind == monomial
  std::vector<Poly> generators;                    // kind == parametrized
  std::vector<std::vector<Poly>> branch_generators;  // kind == multibranch
  std::vector<std::vector<Rat>> singular_fibers;   // each fiber: branch centers
  bool infinity_smooth = true;

  static CurveSpec monomial(std::vector<long> exponents);
  static CurveSpec parametrized(std::vector<Poly> generators,
                                std::vector<std::vector<Rat>> singular_fibers);
  static CurveSpec multibranch(std::vector<std::vector<Poly>> branch_generators,
                               std::vector<Rat> fiber);

  /// Generators as global polynomials (monomial and parametrized kinds).
  std::vector<Poly> generator_polys() const;
};

/// Structural validation: generators nonconstant, fibers singular and
/// mutually distinct, no undeclared critical or collision points
/// detectable from gcds, parametrization birational onto its image.
/// Throws NotSingular / UndeclaredSingularity / InvalidArgument.
void validate_curve(const CurveSpec& curve);

/// Fractional ideal sheaf given by generators containing 1.  Generators
/// are polynomials in t (quotients with nontrivial denominators are
/// normalized away by a global twist before they reach this type).  On a
/// multibranch-prescribed curve the stalk generators may themselves be
/// prescribed per branch; the pole order at infinity is then part of the
/// data rather than read off polynomial degrees.
struct SheafModel {
  CurveSpec curve;
  std::vector<Poly> generators;                      // global polynomial form
  std::vector<std::vector<Poly>> branch_generators;  // per-branch prescribed form
  std::optional<long> pole_infinity;                 // required for the prescribed form

  bool prescribed() const { return !branch_generators.empty(); }

  /// Pole order at infinity: max generator degree, or the prescribed one.
  long pole_at_infinity() const;
};

SheafModel structure_sheaf(const CurveSpec& curve);
SheafModel pencil_sheaf(const CurveSpec& curve, long r);  // O<1, t^r>, r >= 1

}  // namespace nforge

#endif
