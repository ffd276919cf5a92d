#ifndef NFORGE_LINEAR_SYSTEMS_HPP
#define NFORGE_LINEAR_SYSTEMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "nforge/curve.hpp"
#include "nforge/curve_invariants.hpp"

namespace nforge {

/// A two-generator pencil O<1,f> with its computed degree and h0.
struct PencilCandidate {
  long r = 0;  // f = t^r after twist normalization (r >= 1); 0 = supplied sheaf
  std::vector<Poly> generators;
  long degree = 0;
  long h0 = 0;
  std::vector<long> deg_per_fiber;
  long deg_at_infinity = 0;
};

struct GonalityResult {
  long bound = 0;
  bool exact = false;  // monomial-pencil family provably sufficient
  bool budget_exhausted = false;
  PencilCandidate witness;
};

/// Minimal degree over the pencil family O<1, t^r> for r in a budgeted
/// range (plus any supplied candidate sheaves).  Exact for rational
/// curves with one unibranch singular fiber; an upper bound otherwise.
GonalityResult gonality_upper(const CurveSpec& curve, long budget = 0,
                              const std::vector<SheafModel>& extra_candidates = {});

struct GonalityBounds {
  long lower = 2;
  long upper_general = 0;                       // g
  long upper_refined = 0;                       // g + 1 - floor(gbar/2) - eta
  std::optional<long> upper_rational_unibranch; // floor((g+3)/2) when applicable
};

GonalityBounds gonality_bounds(const CurveInvariants& inv);

struct CliffordRecord {
  std::string descriptor;
  long degree = 0;
  long h0 = 0;
  long h1 = 0;
  long index = 0;  // degree - 2*(h0 - 1)
};

struct CliffordResult {
  std::optional<long> value;  // empty when no admissible sheaf was found
  bool exact = false;
  bool budget_exhausted = false;
  std::optional<CliffordRecord> witness;
};

/// Minimum of deg - 2(h0-1) over admissible sheaves (h0 >= 2, h1 >= 2):
/// enumerated monomial fractional ideals for unibranch monomial curves,
/// plus any supplied candidates.  An upper bound unless classification
/// forces the exact value.
CliffordResult clifford_upper(const CurveSpec& curve, long budget = 0,
                              const std::vector<SheafModel>& extra_candidates = {});

struct HyperellipticReport {
  bool gon2 = false;
  enum class Reason { hyperelliptic, rational_nearly_normal, none } reason = Reason::none;
  std::optional<PencilCandidate> witness;
};

/// Exact degree-2 pencil search; the reason separates the nearly-normal
/// rational case (h0(O/C) = 1) from a genuine hyperelliptic curve.
HyperellipticReport is_hyperelliptic_like(const CurveSpec& curve);

struct CliffordClassification {
  std::optional<long> clifford;  // exact value when a proposition forces it
  bool trigonal = false;
  std::string rule;  // which implication fired, or "inconclusive"
  std::optional<CliffordRecord> witness;
};

/// Exact consequences: gon = 2 => Cliff = 0; trigonal and g >= 4 =>
/// Cliff = 1; for g = 5 and Cliff = 1 a sheaf with deg 5, h0 3 must exist
/// and is searched for.
CliffordClassification clifford_classify(const CurveSpec& curve,
                                         const std::vector<SheafModel>& extra_candidates = {});

}  // namespace nforge

#endif
