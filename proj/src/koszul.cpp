#include "nforge/koszul.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nforge/corpus.hpp"
#include "nforge/errors.hpp"
#include "nforge/linalg.hpp"
#include "nforge/noether.hpp"
#include "nforge/semigroup_ops.hpp"
#include "nforge/valuation_engine.hpp"

namespace nforge {

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// Matrix of the Koszul differential
//   wedge^{a+1} V (x) U -> wedge^a V (x) T,  e_T (x) s -> sum (-1)^k
//   e_{T minus t_k} (x) v_{t_k} * s,
// on monomial bases; V = K° exponents, U/T = section exponent lists.
IntMatrix koszul_matrix(const std::vector<long>& v_exps, int a,
                        const std::vector<long>& src_sections,
                        const std::vector<long>& dst_sections) {
  const int g = static_cast<int>(v_exps.size());
  const auto src_sets = subsets_of_size(g, a + 1);
  const auto dst_sets = subsets_of_size(g, a);
  std::map<std::vector<int>, long> dst_index;
  for (size_t i = 0; i < dst_sets.size(); ++i) dst_index[dst_sets[i]] = static_cast<long>(i);
  std::map<long, long> dst_section_index;
  for (size_t i = 0; i < dst_sections.size(); ++i)
    dst_section_index[dst_sections[i]] = static_cast<long>(i);

  const long rows = static_cast<long>(dst_sets.size()) * dst_sections.size();
  const long cols = static_cast<long>(src_sets.size()) * src_sections.size();
  IntMatrix m(rows, std::vector<mpz_class>(cols, 0));
  long col = 0;
  for (const auto& T : src_sets) {
    for (long s : src_sections) {
      for (int k = 0; k <= a; ++k) {
        std::vector<int> rest;
        for (int j = 0; j <= a; ++j)
          if (j != k) rest.push_back(T[j]);
        const long prod = v_exps[T[k]] + s;
        auto it = dst_section_index.find(prod);
        if (it == dst_section_index.end())
          fail(errc::construction_failure,
               "product exponent " + std::to_string(prod) + " missing from the section basis");
        const long row = dst_index.at(rest) * static_cast<long>(dst_sections.size()) + it->second;
        m[row][col] += (k % 2 == 0) ? 1 : -1;
      }
      ++col;
    }
  }
  return m;
}

bool is_zero_product(const IntMatrix& a, const IntMatrix& b) {
  // checks a * b == 0 (dimensions rows(a) x cols(b))
  if (a.empty() || b.empty()) return true;
  const size_t n = a[0].size();
  if (n != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b[0].size(); ++j) {
      mpz_class acc(0);
      for (size_t k = 0; k < n; ++k)
        if (a[i][k] != 0 && b[k][j] != 0) acc += a[i][k] * b[k][j];
      if (acc != 0) return false;
    }
  return true;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) fail(errc::budget_exhausted, "dimension overflows a long");
  return z.get_si();
}

}  // namespace

KoszulReport koszul_dimension(const CurveSpec& curve, int p, int q) {
  if (curve.kind != CurveSpec::Kind::monomial)
    fail(errc::unsupported_model, "Koszul dimensions are computed for monomial models");
  if (p < 0 || q < 0) fail(errc::invalid_argument, "p, q must be >= 0");
  const GoodSemigroup S = local_value_semigroup(
      curve, curve.singular_fibers.empty() ? std::vector<Rat>{Rat(0)}
                                           : curve.singular_fibers.front());
  const IdealValueSet K = canonical_ideal(S);
  std::vector<long> v_exps;
  for (const auto& a : K.strict_part()) v_exps.push_back(a[0]);
  const int g = static_cast<int>(v_exps.size());
  if (g > 10) fail(errc::budget_exhausted, "genus above the Koszul budget (10)");

  const std::vector<long> sq_minus = wq_section_exponents(S, q - 1 >= 0 ? q - 1 : 0);
  const std::vector<long> sq = wq_section_exponents(S, q);
  const std::vector<long> sq_plus = wq_section_exponents(S, q + 1);

  KoszulReport rep;
  rep.p = p;
  rep.q = q;
  const long wedge_p1 = to_long(binomial(g, p + 1));
  const long wedge_p = to_long(binomial(g, p));
  const long wedge_pm1 = p >= 1 ? to_long(binomial(g, p - 1)) : 0;
  rep.dim_domain = wedge_p1 * static_cast<long>(q >= 1 ? sq_minus.size() : 0);
  rep.dim_middle = wedge_p * static_cast<long>(sq.size());
  rep.dim_codomain = wedge_pm1 * static_cast<long>(sq_plus.size());
  if (rep.dim_middle > 0 && rep.dim_middle * std::max(rep.dim_domain, rep.dim_codomain) > 4000000)
    fail(errc::budget_exhausted, "Koszul matrices exceed the size cap");

  IntMatrix phi1, phi2;
  if (rep.dim_domain > 0 && rep.dim_middle > 0) {
    phi1 = koszul_matrix(v_exps, p, sq_minus, sq);
    rep.rank_phi1 = rank_bareiss(phi1);
  }
  if (rep.dim_codomain > 0 && rep.dim_middle > 0 && p >= 1) {
    phi2 = koszul_matrix(v_exps, p - 1, sq, sq_plus);
    rep.rank_phi2 = rank_bareiss(phi2);
  }
  if (!phi1.empty() && !phi2.empty() && !is_zero_product(phi2, phi1))
    fail(errc::construction_failure, "phi2 composed with phi1 is nonzero");

  rep.dim_kpq = (rep.dim_middle - rep.rank_phi2) - rep.rank_phi1;
  return rep;
}

long dim_Ir_hat(long g, long eta, long mu, long r) {
  if (r < 1) fail(errc::invalid_argument, "r must be >= 1");
  const mpz_class v = binomial(r + g - 2 + mu, r) - r * (2 * g - 2 - eta) + (g - eta - mu - 1);
  return to_long(v);
}

long dim_I2_hat_closed(long g, long eta, long mu) {
  return (g * g + (2 * mu - 7) * g + mu * mu - 3 * mu + 2 * eta + 6) / 2;
}

long dim_Ir(long g, long d, long r) {
  if (r < 1) fail(errc::invalid_argument, "r must be >= 1");
  const mpz_class v = binomial(r + g + 2 * d - 1, r) + g * (1 - 2 * r) - 2 * r * d + r - 1;
  return to_long(v);
}

long dim_I2_closed(long g, long d) {
  return ((g + 2 * d - 1) * (g + 2 * d - 2) - 2 * g) / 2;
}

long direct_Ir(const std::vector<long>& exponents, long r) {
  if (exponents.empty() || exponents.front() != 0)
    fail(errc::invalid_argument, "embedding exponents must start at 0");
  if (r < 1) fail(errc::invalid_argument, "r must be >= 1");
  std::set<long> sums(exponents.begin(), exponents.end());
  for (long k = 2; k <= r; ++k) {
    std::set<long> next;
    for (long v : sums)
      for (long e : exponents) next.insert(v + e);
    sums = std::move(next);
  }
  const long n = static_cast<long>(exponents.size()) - 1;
  return to_long(binomial(n + r, r) - static_cast<long>(sums.size()));
}

std::vector<long> canonical_embedding_exponents(const GoodSemigroup& S) {
  const Classification cls = classify(S);
  if (!cls.blowup) fail(errc::unsupported_model, "blowup model unavailable");
  const long cap = 2 * cls.delta - 2 - cls.eta;
  std::vector<long> out;
  for (long v = 0; v <= cap; ++v)
    if (cls.blowup->contains(v)) out.push_back(v);
  return out;
}

IrDimensionRecord check_Ir_hat(const GoodSemigroup& S, long r) {
  const Classification cls = classify(S);
  IrDimensionRecord rec;
  rec.r = r;
  const auto exps = canonical_embedding_exponents(S);
  rec.embedding_dimension = static_cast<long>(exps.size()) - 1;
  const long g = cls.delta;
  if (rec.embedding_dimension != g - 2 + cls.mu.value_or(0))
    fail(errc::construction_failure,
         "embedding dimension disagrees with g - 2 + mu for the blowup embedding");
  rec.formula_value = dim_Ir_hat(g, cls.eta, *cls.mu, r);
  rec.direct_value = direct_Ir(exps, r);
  return rec;
}

IrDimensionRecord check_Ir_star(const GoodSemigroup& S, long r) {
  const StarResult st = star_semigroup(S);
  IrDimensionRecord rec;
  rec.r = r;
  const auto exps = canonical_embedding_exponents(st.star);
  rec.embedding_dimension = static_cast<long>(exps.size()) - 1;
  const long g = numerical_genus(S);
  const long d = S.conductor()[0] - g;  // |beta_P| - delta_P at the one point
  rec.formula_value = dim_Ir(g, d, r);
  rec.direct_value = direct_Ir(exps, r);
  return rec;
}

StarResult star_semigroup(const GoodSemigroup& S) {
  if (S.branches() != 1)
    fail(errc::unsupported_branch_count, "the star construction is numerical");
  const long beta = S.conductor()[0];
  std::vector<long> gaps;
  for (long v = 1; v < beta; ++v)
    if (!S.contains(v)) gaps.push_back(v);

  std::vector<ValueVector> small{ValueVector{0L}};
  for (long l : gaps) small.push_back(ValueVector{2 * beta - l});
  const long star_beta = 2 * beta + 1;
  small.push_back(ValueVector{star_beta});
  StarResult out{GoodSemigroup(1, ValueVector{star_beta}, std::move(small), "star"), 0, 0, 0};
  // Degenerate smooth input: S = N gives S_* = N.
  if (beta == 0) out.star = S;

  const AxiomReport rep = validate(out.star);
  if (!rep.all_pass())
    fail(errc::invalid_semigroup, "S_* violates the semigroup axioms: " + rep.summary());

  const Classification cls = classify(out.star);
  out.g_star = cls.delta;
  out.eta_star = cls.eta;
  out.mu_star = cls.mu.value_or(-1);
  const long delta = numerical_genus(S);
  out.g_star_formula = delta + 2 * (beta - delta);
  out.eta_star_formula = 2 * (beta - delta) - 1;
  out.mu_star_formula = 1;

  if (!(blowup_semigroup(out.star) == S))
    fail(errc::construction_failure, "blowup(S_*) differs from S; this contradicts the theorem");
  return out;
}

CurveSpec family_Cp(int p) {
  if (p < 1) fail(errc::invalid_argument, "the family starts at p = 1");
  std::vector<long> exps{p + 3};
  for (long e = p + 5; e <= 2 * p + 7; ++e) exps.push_back(e);
  return CurveSpec::monomial(std::move(exps));
}

}  // namespace nforge
