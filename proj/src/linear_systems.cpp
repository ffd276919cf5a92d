#include "nforge/linear_systems.hpp"

#include <algorithm>
#include <set>

#include "nforge/corpus.hpp"
#include "nforge/errors.hpp"
#include "nforge/semigroup_ops.hpp"
#include "nforge/valuation_engine.hpp"

namespace nforge {

namespace {

// Degree and h0 of O<1, t^r> on a monomial curve, straight from semigroup
// arithmetic: the stalk value set is S union (r + S).
PencilCandidate monomial_pencil(const GoodSemigroup& S, long r) {
  PencilCandidate c;
  c.r = r;
  c.generators = {Poly(Rat(1)), Poly::monomial(r)};
  const long beta = S.conductor()[0];
  long deg_p = 0;
  for (long v = 0; v <= beta; ++v)
    if (!S.contains(v) && r <= v && S.contains(v - r)) ++deg_p;
  c.deg_per_fiber = {deg_p};
  c.deg_at_infinity = r;
  c.degree = deg_p + r;
  long h0 = 0;
  for (long v = 0; v <= r; ++v)
    if (S.contains(v) || (v >= r && S.contains(v - r))) ++h0;
  c.h0 = h0;
  return c;
}

PencilCandidate engine_pencil(const CurveSpec& curve, long r) {
  PencilCandidate c;
  c.r = r;
  c.generators = {Poly(Rat(1)), Poly::monomial(r)};
  const SheafModel F{curve, c.generators, {}, std::nullopt};
  const DegreeTable deg = sheaf_degree(F);
  c.deg_per_fiber = deg.per_fiber;
  c.deg_at_infinity = deg.at_infinity;
  c.degree = deg.total;
  c.h0 = h0_sheaf(F);
  return c;
}

PencilCandidate sheaf_candidate(const SheafModel& F) {
  PencilCandidate c;
  c.r = 0;
  c.generators = F.generators;
  const DegreeTable deg = sheaf_degree(F);
  c.deg_per_fiber = deg.per_fiber;
  c.deg_at_infinity = deg.at_infinity;
  c.degree = deg.total;
  c.h0 = h0_sheaf(F);
  return c;
}

long curve_genus(const CurveSpec& curve) {
  long g = 0;
  for (const auto& fiber : curve.singular_fibers) {
    const GoodSemigroup S = local_value_semigroup(curve, fiber);
    g += distance(full_box_ideal(S).boxed(), S.boxed());
  }
  return g;
}

bool single_unibranch_fiber(const CurveSpec& curve) {
  return curve.singular_fibers.size() == 1 && curve.singular_fibers.front().size() == 1;
}

}  // namespace

GonalityResult gonality_upper(const CurveSpec& curve, long budget,
                              const std::vector<SheafModel>& extra_candidates) {
  GonalityResult out;
  const long g = curve_genus(curve);
  if (g == 0 && curve.singular_fibers.empty()) {
    out.bound = 1;  // P^1: the coordinate pencil O<1,t>
    out.exact = true;
    out.witness.r = 1;
    out.witness.generators = {Poly(Rat(1)), Poly::variable()};
    out.witness.degree = 1;
    out.witness.deg_at_infinity = 1;
    out.witness.h0 = 2;
    return out;
  }

  long beta_total = 0;
  for (const auto& fiber : curve.singular_fibers)
    beta_total = std::max(beta_total, local_value_semigroup(curve, fiber).conductor().total());
  // Twisting by t^{-r} identifies O<1,t^r> with O<1,t^{-r}>, so the whole
  // family -beta <= r <= g+1 is covered by positive exponents.
  const long r_hi_needed = std::max(g + 1, beta_total);
  const long r_hi = budget > 0 ? std::min(budget, r_hi_needed) : r_hi_needed;
  out.budget_exhausted = r_hi < r_hi_needed;

  std::optional<GoodSemigroup> S_mono;
  if (curve.kind == CurveSpec::Kind::monomial && !curve.singular_fibers.empty())
    S_mono = local_value_semigroup(curve, curve.singular_fibers.front());

  std::optional<PencilCandidate> best;
  auto consider = [&](const PencilCandidate& c) {
    if (c.h0 < 2) return;
    if (!best || c.degree < best->degree ||
        (c.degree == best->degree &&
         std::abs(c.h0 - 2) < std::abs(best->h0 - 2)))
      best = c;
  };
  for (long r = 1; r <= r_hi; ++r)
    consider(S_mono ? monomial_pencil(*S_mono, r) : engine_pencil(curve, r));
  for (const auto& F : extra_candidates) consider(sheaf_candidate(F));

  if (!best) fail(errc::budget_exhausted, "no admissible pencil within the budget");
  out.bound = best->degree;
  out.witness = *best;
  out.exact = single_unibranch_fiber(curve) && !out.budget_exhausted;
  return out;
}

GonalityBounds gonality_bounds(const CurveInvariants& inv) {
  GonalityBounds b;
  b.upper_general = inv.genus;
  b.upper_refined = inv.genus + 1 - inv.eta;  // gbar = 0 for rational models
  long non_gorenstein = 0;
  bool unibranch_non_gorenstein = true;
  for (const auto& pt : inv.points)
    if (!pt.gorenstein) {
      ++non_gorenstein;
      if (pt.semigroup.branches() != 1) unibranch_non_gorenstein = false;
    }
  if (non_gorenstein == 1 && unibranch_non_gorenstein)
    b.upper_rational_unibranch = (inv.genus + 3) / 2;
  return b;
}

namespace {

struct MonomialSheafInvariants {
  long degree, h0, h1;
};

// Invariants of the monomial sheaf with stalk value set E (an S-ideal
// containing 0) and pole order M at infinity.  h1 comes from the
// canonical-duality count over the dual ideal (K : E).
MonomialSheafInvariants monomial_sheaf_invariants(const GoodSemigroup& S,
                                                  const std::vector<char>& in_E, long M,
                                                  const IdealValueSet& K, long max_ko) {
  const long beta = S.conductor()[0];
  MonomialSheafInvariants out{0, 0, 0};
  for (long v = 0; v <= beta; ++v)
    if (in_E[v] && !S.contains(v)) ++out.degree;
  out.degree += M;
  for (long v = 0; v <= std::min(M, beta); ++v)
    if (in_E[v]) ++out.h0;
  if (M > beta) out.h0 += M - beta;
  // dual ideal D = { a : a + E subset of K } inside [0, beta]
  const long dual_cap = max_ko - M;
  for (long a = 0; a <= std::min(dual_cap, beta); ++a) {
    bool ok = true;
    for (long v = 0; v <= beta && ok; ++v)
      if (in_E[v] && !K.contains(a + v)) ok = false;
    if (ok) ++out.h1;
  }
  return out;
}

}  // namespace

CliffordResult clifford_upper(const CurveSpec& curve, long budget,
                              const std::vector<SheafModel>& extra_candidates) {
  CliffordResult out;
  const long g = curve_genus(curve);
  auto consider = [&](const CliffordRecord& rec) {
    if (rec.h0 < 2 || rec.h1 < 2) return;
    if (!out.value || rec.index < *out.value) {
      out.value = rec.index;
      out.witness = rec;
    }
  };

  if (curve.kind == CurveSpec::Kind::monomial && single_unibranch_fiber(curve)) {
    const GoodSemigroup S = local_value_semigroup(curve, curve.singular_fibers.front());
    const IdealValueSet K = canonical_ideal(S);
    const auto Ko = K.strict_part();
    const long max_ko = Ko.empty() ? 0 : Ko.back()[0];
    const long beta = S.conductor()[0];
    std::vector<long> gaps;
    for (long v = 1; v < beta; ++v)
      if (!S.contains(v)) gaps.push_back(v);
    const long budget_cap = budget > 0 ? budget : (1L << 14);
    const long all_subsets = gaps.size() < 20 ? (1L << gaps.size()) : budget_cap + 1;
    if (all_subsets > budget_cap) out.budget_exhausted = true;
    const long subsets = std::min(all_subsets, budget_cap);
    for (long mask = 0; mask < subsets; ++mask) {
      std::vector<char> in_E(beta + 1, 0);
      for (long v = 0; v <= beta; ++v) in_E[v] = S.contains(v) ? 1 : 0;
      for (size_t i = 0; i < gaps.size(); ++i)
        if (mask & (1L << i)) in_E[gaps[i]] = 1;
      // ideal condition: E + S stays in E (box check suffices)
      bool ideal = true;
      for (long v = 0; v <= beta && ideal; ++v) {
        if (!in_E[v]) continue;
        for (long s : S.small_numbers()) {
          const long w = std::min(v + s, beta);
          if (!in_E[w]) {
            ideal = false;
            break;
          }
        }
      }
      if (!ideal) continue;
      for (long M = 0; M <= max_ko; ++M) {
        const auto inv = monomial_sheaf_invariants(S, in_E, M, K, max_ko);
        if (inv.h0 - inv.h1 != inv.degree + 1 - g)
          fail(errc::construction_failure,
               "duality count violates Riemann-Roch on a monomial sheaf");
        CliffordRecord rec;
        rec.descriptor = "monomial ideal mask=" + std::to_string(mask) +
                         " pole=" + std::to_string(M);
        rec.degree = inv.degree;
        rec.h0 = inv.h0;
        rec.h1 = inv.h1;
        rec.index = inv.degree - 2 * (inv.h0 - 1);
        consider(rec);
      }
    }
  }

  for (const auto& F : extra_candidates) {
    const PencilCandidate c = sheaf_candidate(F);
    CliffordRecord rec;
    rec.descriptor = "supplied sheaf";
    rec.degree = c.degree;
    rec.h0 = c.h0;
    rec.h1 = c.h0 + g - 1 - c.degree;  // Riemann-Roch
    rec.index = c.degree - 2 * (c.h0 - 1);
    consider(rec);
  }
  return out;
}

HyperellipticReport is_hyperelliptic_like(const CurveSpec& curve) {
  HyperellipticReport rep;
  if (curve.singular_fibers.empty()) return rep;  // smooth rational model

  // A pencil O<1,t^r> of total degree 2 needs r <= 2.
  std::optional<GoodSemigroup> S_mono;
  if (curve.kind == CurveSpec::Kind::monomial)
    S_mono = local_value_semigroup(curve, curve.singular_fibers.front());
  for (long r = 1; r <= 2; ++r) {
    const PencilCandidate c =
        S_mono ? monomial_pencil(*S_mono, r) : engine_pencil(curve, r);
    if (c.degree == 2 && c.h0 >= 2) {
      rep.gon2 = true;
      rep.witness = c;
      break;
    }
  }
  if (rep.gon2) {
    long h0_o_mod_c = 0;
    for (const auto& fiber : curve.singular_fibers)
      h0_o_mod_c += dim_O_mod_conductor(local_value_semigroup(curve, fiber));
    rep.reason = (h0_o_mod_c == 1) ? HyperellipticReport::Reason::rational_nearly_normal
                                   : HyperellipticReport::Reason::hyperelliptic;
  }
  return rep;
}

CliffordClassification clifford_classify(const CurveSpec& curve,
                                         const std::vector<SheafModel>& extra_candidates) {
  CliffordClassification out;
  const HyperellipticReport hyper = is_hyperelliptic_like(curve);
  if (hyper.gon2) {
    out.clifford = 0;
    out.rule = "gon(C) = 2 forces Cliff(C) = 0";
    return out;
  }
  const GonalityResult gon = gonality_upper(curve);
  const long g = curve_genus(curve);
  if (gon.exact && gon.bound == 3) {
    out.trigonal = true;
    if (g >= 4) {
      out.clifford = 1;
      out.rule = "trigonal with g >= 4 forces Cliff(C) = 1";
      CliffordRecord rec;
      rec.descriptor = "trigonal pencil t^" + std::to_string(gon.witness.r);
      rec.degree = gon.witness.degree;
      rec.h0 = gon.witness.h0;
      rec.h1 = rec.h0 + g - 1 - rec.degree;
      rec.index = rec.degree - 2 * (rec.h0 - 1);
      out.witness = rec;
      return out;
    }
    out.rule = "trigonal but g < 4; inconclusive";
    return out;
  }
  if (g == 5) {
    // Cliff = 1 iff a sheaf with deg 5 and h0 3 exists.
    const CliffordResult search = clifford_upper(curve, 0, extra_candidates);
    if (search.witness && search.witness->degree == 5 && search.witness->h0 == 3) {
      out.clifford = 1;
      out.rule = "genus 5 witness with deg 5 and h0 3";
      out.witness = search.witness;
      return out;
    }
    if (search.value && *search.value <= 0)
      fail(errc::construction_failure,
           "Clifford search found index <= 0 on a curve with gon > 2");
  }
  out.rule = "inconclusive";
  return out;
}

}  // namespace nforge
