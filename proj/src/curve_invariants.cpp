#include "nforge/curve_invariants.hpp"

#include "nforge/corpus.hpp"
#include "nforge/errors.hpp"
#include "nforge/valuation_engine.hpp"

namespace nforge {

long dim_O_mod_conductor(const GoodSemigroup& S) {
  const BoxedSet conductor_ideal{S.conductor(), S.conductor(), {S.conductor()}};
  return distance(S.boxed(), conductor_ideal);
}

CurveInvariants curve_invariants(const CurveSpec& curve) {
  validate_curve(curve);
  CurveInvariants out;
  bool all_unibranch = true;
  bool mu_known_everywhere = true;
  long mu_total = 0;
  long literal_gor_beta = 0;

  for (const auto& fiber : curve.singular_fibers) {
    PointInvariants pt;
    pt.fiber = fiber;
    pt.semigroup = local_value_semigroup(curve, fiber);
    const AxiomReport rep = validate(pt.semigroup);
    if (!rep.all_pass())
      fail(errc::invalid_semigroup, "extracted value set fails validation: " + rep.summary());
    if (pt.semigroup.conductor() == ValueVector(pt.semigroup.branches(), 0))
      fail(errc::not_singular, "declared fiber is a smooth point");

    const Classification cls = classify(pt.semigroup);
    pt.delta = cls.delta;
    pt.eta = cls.eta;
    pt.mu = cls.mu;
    pt.gorenstein = cls.gorenstein;
    pt.kunz = cls.kunz;
    pt.dim_O_mod_conductor = dim_O_mod_conductor(pt.semigroup);

    out.genus += pt.delta;
    out.eta += pt.eta;
    out.h0_O_mod_conductor += pt.dim_O_mod_conductor;
    if (pt.semigroup.branches() != 1) all_unibranch = false;
    if (!pt.gorenstein)
      out.rho_minus_sigma += pt.semigroup.conductor().total() - pt.delta;
    else
      literal_gor_beta += pt.semigroup.conductor().total();
    if (pt.mu)
      mu_total += *pt.mu;
    else
      mu_known_everywhere = false;

    out.points.push_back(std::move(pt));
  }

  long literal_nongor_delta = 0;
  for (const auto& pt : out.points)
    if (!pt.gorenstein) literal_nongor_delta += pt.delta;
  out.rho_minus_sigma_literal = literal_gor_beta - literal_nongor_delta;

  out.nearly_normal = (out.h0_O_mod_conductor == 1);

  // Hyperelliptic-likeness is exactly decidable here for a single
  // unibranch fiber: a degree-2 pencil exists iff 2 lies in the value
  // semigroup or the curve is rational nearly normal.
  if (curve.singular_fibers.empty()) {
    out.nonhyperelliptic = false;  // smooth rational model
  } else if (curve.singular_fibers.size() == 1 && all_unibranch) {
    const GoodSemigroup& S = out.points.front().semigroup;
    const bool gon2 = S.contains(2L) || out.nearly_normal;
    out.nonhyperelliptic = out.nearly_normal ? true : !gon2;
  } else if (out.nearly_normal) {
    out.nonhyperelliptic = true;  // nearly normal curves are nonhyperelliptic
  }

  if (mu_known_everywhere && out.nonhyperelliptic.value_or(false)) {
    out.mu = mu_total;
    out.nearly_gorenstein = (mu_total == 1);
  }
  return out;
}

}  // namespace nforge
