#ifndef NFORGE_KOSZUL_HPP
#define NFORGE_KOSZUL_HPP

#include <optional>
#include <vector>

#include "nforge/curve.hpp"
#include "nforge/good_semigroup.hpp"

namespace nforge {

/// Exact data of the complex
///   wedge^{p+1} H0(F) (x) H0(F^{q-1}) -> wedge^p H0(F) (x) H0(F^q)
///     -> wedge^{p-1} H0(F) (x) H0(F^{q+1})
/// for the dualizing model F = W on a unibranch monomial curve.
struct KoszulReport {
  int p = 0, q = 0;
  long dim_domain = 0, dim_middle = 0, dim_codomain = 0;
  long rank_phi1 = 0, rank_phi2 = 0;
  long dim_kpq = 0;  // dim ker(phi2) - rank(phi1)
};

KoszulReport koszul_dimension(const CurveSpec& curve, int p, int q);

/// Binomial-formula dimension of I_r for the blowup embedding in
/// P^{g-2+mu}: C(r+g-2+mu, r) - r(2g-2-eta) + (g-eta-mu-1).
long dim_Ir_hat(long g, long eta, long mu, long r);
/// Closed form at r=2: (g^2 + (2mu-7)g + mu^2 - 3mu + 2eta + 6)/2.
long dim_I2_hat_closed(long g, long eta, long mu);

/// Dimension of I_r for the curve embedding in P^{g+2(rho-sigma)-1}:
/// C(r+g+2d-1, r) + g(1-2r) - 2rd + r - 1 with d = rho - sigma.
long dim_Ir(long g, long rho_minus_sigma, long r);
long dim_I2_closed(long g, long rho_minus_sigma);

/// C(r+N, r) minus the number of distinct r-fold sums of the exponents:
/// the dimension of the degree-r part of the homogeneous ideal of the
/// monomial embedding t -> (t^{a_0}, ..., t^{a_N}), a_0 = 0.
long direct_Ir(const std::vector<long>& embedding_exponents, long r);

struct IrDimensionRecord {
  long r = 0;
  long formula_value = 0;
  long direct_value = 0;
  long embedding_dimension = 0;  // N
  bool agree() const { return formula_value == direct_value; }
};

/// Exponents of the complete linear system embedding the blowup:
/// blowup-semigroup values capped at 2g-2-eta.
std::vector<long> canonical_embedding_exponents(const GoodSemigroup& S);

/// Formula/direct cross-check for the blowup embedding of S at level r.
IrDimensionRecord check_Ir_hat(const GoodSemigroup& S, long r);

/// Formula/direct cross-check for the curve with star semigroup S_*.
IrDimensionRecord check_Ir_star(const GoodSemigroup& S, long r);

struct StarResult {
  GoodSemigroup star;
  long g_star = 0, eta_star = 0, mu_star = 0;              // computed
  long g_star_formula = 0, eta_star_formula = 0, mu_star_formula = 1;
};

/// S_* = {0} + {2|beta| - l_i} + [2|beta|+1, inf); verifies the semigroup
/// axioms and the inversion blowup(S_*) = S.
StarResult star_semigroup(const GoodSemigroup& S);

/// The curve Spec k[t^{p+3}, t^{p+5}, ..., t^{2p+7}].
CurveSpec family_Cp(int p);

}  // namespace nforge

#endif
