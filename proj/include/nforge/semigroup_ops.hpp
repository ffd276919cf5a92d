#ifndef NFORGE_SEMIGROUP_OPS_HPP
#define NFORGE_SEMIGROUP_OPS_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nforge/good_semigroup.hpp"

namespace nforge {

/// Delta^E(a) = { b in E : b_i = a_i for some i, b_j > a_j for j != i },
/// computed by a direct scan of the box extended by one unit per
/// coordinate.  For s=1 this reduces to membership of a.
std::vector<ValueVector> delta_set(const BoxedSet& E, const ValueVector& a);
std::vector<ValueVector> delta_set(const GoodSemigroup& S, const ValueVector& a);
std::vector<ValueVector> delta_set(const IdealValueSet& E, const ValueVector& a);

/// Canonical ideal K = { a : Delta^S(gamma - a) is empty }, truncated to
/// [0, beta].  Its strict part K° is the value model of H^0 of the
/// dualizing sheaf for rational one-point curves.
IdealValueSet canonical_ideal(const GoodSemigroup& S);

/// One saturated chain in E from `from` to `to`; ties broken by
/// lexicographic minimum (or maximum, for the cross-check chain).
std::vector<ValueVector> saturated_chain(const BoxedSet& E, const ValueVector& from,
                                         const ValueVector& to, bool lex_max_ties = false);

/// d(E) - d(F) for nested good sets F inside E over a common box: the
/// dimension of the corresponding module quotient.  Both chain lengths are
/// recomputed with a second tie-break and must agree
/// (ChainLengthMismatch otherwise); for s=1 the result is cross-checked
/// against |E \ F| inside the box.
long distance(const BoxedSet& E, const BoxedSet& F);
long distance(const IdealValueSet& E, const IdealValueSet& F);

/// Exact {e+f | e in E, f in F} intersected with [lo(E)+lo(F), box_hi].
/// first_summand/second_summand record one witness decomposition per
/// element when requested.
struct SumsetResult {
  BoxedSet set;
  std::map<ValueVector, std::pair<ValueVector, ValueVector>> decomposition;
};
SumsetResult sumset(const BoxedSet& E, const BoxedSet& F, const ValueVector& box_hi,
                    bool track_decompositions = false);

/// n-fold sumset of E in the same box; decompositions expand to n parts.
struct NFoldSumsetResult {
  BoxedSet set;
  std::map<ValueVector, std::vector<ValueVector>> decomposition;
};
NFoldSumsetResult n_fold_sumset(const BoxedSet& E, int n, const ValueVector& box_hi,
                                bool track_decompositions = false);

/// Smallest good semigroup containing every n-fold sumset of K° together
/// with the conductor tail; models the value set of the blowup of the
/// local ring along the dualizing module for monomial points.
GoodSemigroup blowup_semigroup(const GoodSemigroup& S);

struct Classification {
  long delta = 0;                     // dim(Obar/O): local genus contribution
  long eta = 0;                       // dim(W/O) = distance(K, S)
  std::optional<long> mu;             // dim(O'/W) = distance(blowup, K) when modeled
  std::optional<GoodSemigroup> blowup;
  bool gorenstein = false;            // eta == 0
  bool kunz = false;                  // eta == 1
  std::optional<bool> almost_gorenstein;  // mu <= 1 when mu is modeled
};

/// delta, eta, mu and the Gorenstein-type flags of a validated semigroup.
Classification classify(const GoodSemigroup& S);

/// True iff S (s=1) is symmetric: a in S <=> gamma - a not in S.
bool is_symmetric_numerical(const GoodSemigroup& S);

}  // namespace nforge

#endif
