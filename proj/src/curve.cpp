#include "nforge/curve.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nforge/errors.hpp"
#include "nforge/valuation_engine.hpp"

namespace nforge {

CurveSpec CurveSpec::monomial(std::vector<long> exponents) {
  CurveSpec c;
  c.kind = Kind::monomial;
  c.monomial_exponents = std::move(exponents);
  std::sort(c.monomial_exponents.begin(), c.monomial_exponents.end());
  if (!c.monomial_exponents.empty() && c.monomial_exponents.front() >= 2)
    c.singular_fibers = {{Rat(0)}};
  return c;
}

CurveSpec CurveSpec::parametrized(std::vector<Poly> generators,
                                  std::vector<std::vector<Rat>> singular_fibers) {
  CurveSpec c;
  c.kind = Kind::parametrized;
  c.generators = std::move(generators);
  c.singular_fibers = std::move(singular_fibers);
  return c;
}

CurveSpec CurveSpec::multibranch(std::vector<std::vector<Poly>> branch_generators,
                                 std::vector<Rat> fiber) {
  CurveSpec c;
  c.kind = Kind::multibranch;
  c.branch_generators = std::move(branch_generators);
  c.singular_fibers = {std::move(fiber)};
  return c;
}

std::vector<Poly> CurveSpec::generator_polys() const {
  if (kind == Kind::parametrized) return generators;
  if (kind == Kind::multibranch)
    fail(errc::unsupported_model, "multibranch generators have no global polynomial form");
  std::vector<Poly> out;
  for (long e : monomial_exponents) out.push_back(Poly::monomial(e));
  return out;
}

namespace {

// deg(p) == sum of orders at the given centers, i.e. all roots are
// accounted for by the declared points.
bool roots_all_declared(const Poly& p, const std::vector<Rat>& centers) {
  if (p.is_zero()) return false;
  long acc = 0;
  for (const auto& c : centers) acc += p.order_at(c);
  return acc == p.degree();
}

// Row lattice of the value vectors equals Z^s: integer elimination down
// to a triangular form with unit diagonal.
bool generates_full_lattice(std::vector<ValueVector> rows, int s) {
  std::vector<std::vector<long>> m;
  for (const auto& r : rows) m.push_back(r.coords());
  long det = 1;
  int row = 0;
  for (int col = 0; col < s; ++col) {
    // reduce column col below `row` by gcd steps
    int piv = -1;
    for (size_t i = row; i < m.size(); ++i)
      if (m[i][col] != 0) {
        piv = static_cast<int>(i);
        break;
      }
    if (piv < 0) return false;
    std::swap(m[row], m[piv]);
    for (size_t i = row + 1; i < m.size(); ++i) {
      while (m[i][col] != 0) {
        const long q = m[row][col] / m[i][col];
        for (int j = 0; j < s; ++j) m[row][j] -= q * m[i][j];
        std::swap(m[row], m[i]);
      }
    }
    det *= m[row][col];
    ++row;
  }
  return det == 1 || det == -1;
}

}  // namespace

void validate_curve(const CurveSpec& curve) {
  if (!curve.infinity_smooth)
    fail(errc::invalid_argument, "t = infinity must be a smooth point in this version");

  if (curve.kind == CurveSpec::Kind::multibranch) {
    if (curve.singular_fibers.size() != 1)
      fail(errc::invalid_argument, "a multibranch prescription has exactly one fiber");
    const auto& fiber = curve.singular_fibers.front();
    std::set<Rat> seen(fiber.begin(), fiber.end());
    if (seen.size() != fiber.size())
      fail(errc::invalid_argument, "fiber centers must be distinct");
    if (curve.branch_generators.empty()) fail(errc::empty_generators, "no generators");
    for (const auto& gen : curve.branch_generators) {
      if (gen.size() != fiber.size())
        fail(errc::invalid_argument, "generator component count differs from branch count");
      for (const auto& comp : gen) {
        if (comp.is_zero())
          fail(errc::invalid_argument, "zero branch component in a generator");
        if (comp.order_at(Rat(0)) < 1)
          fail(errc::not_singular, "branch component " + comp.str() + " is a local unit");
      }
    }
    const GoodSemigroup S = local_value_semigroup(curve, fiber);
    ValueVector ext = S.conductor();
    for (int i = 0; i < S.branches(); ++i) ext[i] += 2;
    if (!generates_full_lattice(S.boxed().extended_to(ext).elements, S.branches()))
      fail(errc::invalid_argument,
           "value semigroup does not generate Z^s; the prescription is not birational");
    return;
  }

  const auto gens = curve.generator_polys();
  if (gens.empty()) fail(errc::empty_generators, "curve has no generators");
  for (const auto& g : gens)
    if (g.degree() < 1)
      fail(errc::invalid_argument, "constant generator " + g.str());

  if (curve.kind == CurveSpec::Kind::monomial) {
    long g = 0;
    for (long e : curve.monomial_exponents) g = std::gcd(g, e);
    if (g != 1)
      fail(errc::non_coprime_generators, "monomial exponents have gcd " + std::to_string(g));
    return;
  }

  // Declared centers must be pairwise distinct.
  std::set<Rat> seen;
  for (const auto& fiber : curve.singular_fibers) {
    if (fiber.empty()) fail(errc::invalid_argument, "empty singular fiber");
    for (const auto& c : fiber)
      if (!seen.insert(c).second)
        fail(errc::invalid_argument, "parameter value " + Rat(c).get_str() +
                                         " declared in two fibers");
  }

  // Within one fiber every generator takes one common value; across fibers
  // the value tuples must differ (a collision means two declared points
  // are actually one).
  std::vector<std::vector<Rat>> fiber_values;
  for (const auto& fiber : curve.singular_fibers) {
    std::vector<Rat> vals;
    for (const auto& g : gens) {
      const Rat v0 = g.eval(fiber.front());
      for (const auto& c : fiber)
        if (g.eval(c) != v0)
          fail(errc::invalid_argument,
               "fiber points disagree on generator " + g.str());
      vals.push_back(v0);
    }
    for (const auto& other : fiber_values)
      if (other == vals)
        fail(errc::undeclared_singularity,
             "two declared fibers map to the same point of the curve");
    fiber_values.push_back(std::move(vals));
  }

  // Collision detection per fiber: the locus where all local generators
  // vanish must be exactly the declared centers.
  for (size_t fi = 0; fi < curve.singular_fibers.size(); ++fi) {
    Poly common;
    bool first = true;
    for (size_t k = 0; k < gens.size(); ++k) {
      const Poly local = gens[k] - Poly(fiber_values[fi][k]);
      if (local.is_zero()) continue;
      common = first ? local : poly_gcd(common, local);
      first = false;
    }
    if (first) fail(errc::invalid_argument, "all generators constant on a fiber");
    if (!roots_all_declared(common, curve.singular_fibers[fi]))
      fail(errc::undeclared_singularity,
           "an undeclared parameter value maps to the declared singular point of fiber " +
               std::to_string(fi + 1));
  }

  // Critical points: roots of gcd of the derivatives must all be declared.
  {
    Poly dgcd;
    bool first = true;
    for (const auto& g : gens) {
      dgcd = first ? g.derivative() : poly_gcd(dgcd, g.derivative());
      first = false;
    }
    if (!dgcd.is_zero() && dgcd.degree() >= 1) {
      std::vector<Rat> centers;
      for (const auto& fiber : curve.singular_fibers)
        for (const auto& c : fiber) centers.push_back(c);
      if (!roots_all_declared(dgcd, centers))
        fail(errc::undeclared_singularity,
             "the parametrization has an undeclared critical point (gcd of derivatives: " +
                 dgcd.str() + ")");
    }
  }

  // Birationality: the value vectors at each fiber generate Z^s.
  for (const auto& fiber : curve.singular_fibers) {
    const GoodSemigroup S = local_value_semigroup(curve, fiber);
    ValueVector ext = S.conductor();
    for (int i = 0; i < S.branches(); ++i) ext[i] += 2;
    if (!generates_full_lattice(S.boxed().extended_to(ext).elements, S.branches()))
      fail(errc::invalid_argument,
           "value semigroup does not generate Z^s; parametrization is not birational");
  }
}

long SheafModel::pole_at_infinity() const {
  if (pole_infinity) return *pole_infinity;
  if (prescribed())
    fail(errc::invalid_argument, "prescribed sheaf generators need an explicit pole order");
  long m = 0;
  for (const auto& g : generators) m = std::max(m, g.degree());
  return m;
}

SheafModel structure_sheaf(const CurveSpec& curve) {
  return SheafModel{curve, {Poly(Rat(1))}, {}, std::nullopt};
}

SheafModel pencil_sheaf(const CurveSpec& curve, long r) {
  if (r < 1) fail(errc::invalid_argument, "pencil exponent must be >= 1 after normalization");
  return SheafModel{curve, {Poly(Rat(1)), Poly::monomial(r)}, {}, std::nullopt};
}

}  // namespace nforge
