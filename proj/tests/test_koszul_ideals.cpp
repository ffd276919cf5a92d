#include <doctest.h>

#include "nforge/corpus.hpp"
#include "nforge/errors.hpp"
#include "nforge/koszul.hpp"
#include "nforge/noether.hpp"
#include "nforge/semigroup_ops.hpp"

using namespace nforge;

TEST_CASE("dimension formulas: worked values") {
  CHECK(dim_Ir_hat(5, 1, 1, 2) == 3);
  CHECK(dim_I2_hat_closed(5, 1, 1) == 3);
  CHECK(dim_Ir_hat(5, 1, 1, 1) == 0);  // no linear forms vanish

  // <3,5,7>: beta = 5, delta = 3, d = beta - delta = 2, g = 3
  CHECK(dim_Ir(3, 2, 2) == 12);
  CHECK(dim_I2_closed(3, 2) == 12);
}

TEST_CASE("direct count: blowup embedding of <3,7,10,11>") {
  const auto S = from_numerical_generators({3, 7, 10, 11});
  const auto exps = canonical_embedding_exponents(S);
  CHECK(exps == std::vector<long>{0, 3, 4, 6, 7});
  CHECK(direct_Ir(exps, 2) == 3);  // (2+4 choose 2) - 12
  CHECK(direct_Ir(exps, 1) == 0);
}

TEST_CASE("formula agrees with the direct count on the blowup embeddings") {
  int fixtures = 0;
  for (const auto& S : enumerate_numerical_semigroups(8)) {
    const auto cls = classify(S);
    if (cls.gorenstein || cls.delta < 3) continue;
    ++fixtures;
    for (long r = 2; r <= 4; ++r) {
      const auto rec = check_Ir_hat(S, r);
      CHECK(rec.agree());
    }
  }
  CHECK(fixtures >= 20);
}

TEST_CASE("star semigroup: worked examples") {
  const auto st = star_semigroup(from_numerical_generators({3, 5, 7}));
  CHECK(st.star.small_numbers() == std::vector<long>{0, 6, 8, 9, 11});
  CHECK(st.g_star == 7);
  CHECK(st.eta_star == 3);
  CHECK(st.mu_star == 1);
  CHECK(st.g_star == st.g_star_formula);
  CHECK(st.eta_star == st.eta_star_formula);

  const auto trivial = star_semigroup(from_numerical_generators({1}));
  CHECK(trivial.star.conductor()[0] == 0);  // N maps to N

  const auto big = star_semigroup(from_numerical_generators({3, 7, 10, 11}));
  CHECK(big.g_star == 13);
  CHECK(big.eta_star == 7);
}

TEST_CASE("star inversion and closed forms, exhaustively to genus 8") {
  for (const auto& S : enumerate_numerical_semigroups(8)) {
    if (classify(S).gorenstein) continue;
    const auto st = star_semigroup(S);  // asserts blowup(S_*) == S internally
    CHECK(st.g_star == st.g_star_formula);
    CHECK(st.eta_star == st.eta_star_formula);
    CHECK(st.mu_star == 1);
  }
}

TEST_CASE("star fixtures: curve formula agrees with the direct count") {
  for (const auto& S : enumerate_numerical_semigroups(8)) {
    if (classify(S).gorenstein) continue;
    const auto rec = check_Ir_star(S, 2);
    CHECK(rec.agree());
    CHECK(rec.embedding_dimension ==
          numerical_genus(S) + 2 * (S.conductor()[0] - numerical_genus(S)) - 1);
  }
}

TEST_CASE("family C_p") {
  const auto c1 = family_Cp(1);
  CHECK(c1.monomial_exponents == std::vector<long>{4, 6, 7, 8, 9});
  const auto S1 = from_numerical_generators(c1.monomial_exponents);
  CHECK(numerical_genus(S1) == 4);
  CHECK(classify(S1).eta == 2);  // eta = p + 1

  const auto S2 = from_numerical_generators(family_Cp(2).monomial_exponents);
  CHECK(family_Cp(2).monomial_exponents == std::vector<long>{5, 7, 8, 9, 10, 11});
  CHECK(classify(S2).eta == 3);

  const auto S3 = from_numerical_generators(family_Cp(3).monomial_exponents);
  CHECK(classify(S3).eta == 4);
}

TEST_CASE("koszul: K_{0,2} vanishes for the worked nonhyperelliptic example") {
  const auto rep = koszul_dimension(CurveSpec::monomial({3, 7, 10, 11}), 0, 2);
  CHECK(rep.dim_kpq == 0);
  CHECK(rep.dim_middle == 12);  // h0(W^2)
}

TEST_CASE("koszul: K_{0,1} vanishes") {
  const auto rep = koszul_dimension(CurveSpec::monomial({3, 7, 10, 11}), 0, 1);
  CHECK(rep.dim_kpq == 0);
}

TEST_CASE("koszul: hyperelliptic K_{0,2} is nonzero") {
  const auto rep = koszul_dimension(CurveSpec::monomial({2, 7}), 0, 2);
  CHECK(rep.dim_kpq == 1);
}

TEST_CASE("koszul: K_{j,2}(C_p, omega) = 0 for j < p + 1") {
  for (int p = 1; p <= 3; ++p) {
    const auto curve = family_Cp(p);
    for (int j = 0; j < p + 1; ++j) {
      const auto rep = koszul_dimension(curve, j, 2);
      CHECK(rep.dim_kpq == 0);
    }
  }
}

TEST_CASE("koszul matches the level-2 surjectivity defect on the corpus") {
  for (const auto& S : enumerate_numerical_semigroups(6)) {
    if (S.conductor()[0] < 3) continue;
    const auto curve = CurveSpec::monomial(minimal_generators_of(S));
    const auto rep = koszul_dimension(curve, 0, 2);
    const auto lvl = max_noether_level(S, 2);
    CHECK((rep.dim_kpq == 0) == lvl.surjective);
    CHECK(rep.dim_kpq ==
          static_cast<long>(lvl.sections.size()) - static_cast<long>(lvl.image.size()));
  }
}
