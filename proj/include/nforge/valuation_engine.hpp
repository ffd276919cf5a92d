#ifndef NFORGE_VALUATION_ENGINE_HPP
#define NFORGE_VALUATION_ENGINE_HPP

#include <map>
#include <vector>

#include "nforge/curve.hpp"
#include "nforge/good_semigroup.hpp"

namespace nforge {

/// Truncated power-series expansion of f around t = center with exact
/// rational coefficients of (t-center)^0 .. (t-center)^order.
std::vector<Rat> expand_at(const Poly& f, const Rat& center, long order);

/// Value semigroup of the local ring at the declared fiber, truncated at
/// its conductor.  Candidate values are read off exact rank profiles of
/// the spanned coefficient windows; the window grows until the candidate
/// set (with its conductor) stabilizes twice consecutively.  A positive
/// window_floor forces the scan to start at least that deep (the
/// double-check hook for the stabilization property).
GoodSemigroup local_value_semigroup(const CurveSpec& curve, const std::vector<Rat>& fiber);
GoodSemigroup local_value_semigroup_deep(const CurveSpec& curve, const std::vector<Rat>& fiber,
                                         long window_floor);

/// Value set of the module generated by the sheaf generators over the
/// local ring at the fiber.
IdealValueSet local_ideal_values(const CurveSpec& curve, const std::vector<Rat>& fiber,
                                 const std::vector<Poly>& sheaf_generators);
IdealValueSet local_ideal_values(const CurveSpec& curve, const std::vector<Rat>& fiber,
                                 const SheafModel& sheaf);

struct DegreeTable {
  std::vector<long> per_fiber;  // aligned with curve.singular_fibers
  long at_infinity = 0;
  long total = 0;
};

/// deg_P F = distance(v(F_P), v(O_P)) at singular fibers plus pole-order
/// bookkeeping at the smooth point at infinity.
DegreeTable sheaf_degree(const SheafModel& F);

/// Dimension of the space of global sections: polynomials in t bounded by
/// the generator pole order at infinity and lying stalk-wise in F_P at
/// every singular fiber, by exact linear algebra on coefficient windows.
/// Monomial models take the semigroup counting fast path.
long h0_sheaf(const SheafModel& F);

/// Randomized witness for the subspace criterion: a combination realizing
/// v = a for an achieved value a (property-test hook; <= retries tries).
bool achieved_value_has_witness(const CurveSpec& curve, const std::vector<Rat>& fiber,
                                const ValueVector& a, int retries = 3);

}  // namespace nforge

#endif
