#include <doctest.h>

#include <set>

#include "nforge/corpus.hpp"
#include "nforge/errors.hpp"
#include "nforge/noether.hpp"
#include "nforge/semigroup_ops.hpp"

using namespace nforge;

TEST_CASE("lemma witness: spec examples") {
  const auto S = from_numerical_generators({3, 7, 10, 11});
  const auto w = find_lemma_witness(S);
  CHECK(w.d == ValueVector{4});
  CHECK(w.ell == 1);
  CHECK(w.complement == ValueVector{4});  // 9 - 4 - 1

  CHECK_THROWS_AS(find_lemma_witness(from_numerical_generators({2, 3})), Error);
  try {
    find_lemma_witness(from_numerical_generators({2, 3}));
  } catch (const Error& e) {
    CHECK(e.code() == errc::gorenstein_input);
  }
}

TEST_CASE("lemma witness: exhaustive corpus genus <= 8") {
  int non_gorenstein = 0;
  for (const auto& S : enumerate_numerical_semigroups(8)) {
    if (classify(S).gorenstein) continue;
    ++non_gorenstein;
    const auto w = find_lemma_witness(S);
    const auto K = canonical_ideal(S);
    // witness invariants: d in K° \ S minimal, complement in K°
    CHECK(K.contains(w.d));
    CHECK(lt(w.d, S.conductor()));
    CHECK(!S.contains(w.d));
    CHECK(K.contains(w.complement));
    CHECK(w.d + w.complement + unit_vector(1, w.ell - 1) == S.conductor());
  }
  CHECK(non_gorenstein > 60);  // most of the 156 semigroups are non-Gorenstein
}

TEST_CASE("noether sequence: <3,7,10,11>") {
  const auto S = from_numerical_generators({3, 7, 10, 11});
  const auto cert = build_noether_sequence(S);
  CHECK(!cert.empty);
  CHECK(cert.r == 2);
  CHECK(cert.expected_length == 6);
  std::vector<long> seq;
  for (const auto& e : cert.sequence) seq.push_back(e.value[0]);
  CHECK(seq == std::vector<long>{9, 10, 11, 12, 13, 14});
  // decompositions from the recipe: 9 = 6+3 and 14 = 7+7
  CHECK(cert.sequence.front().left[0] + cert.sequence.front().right[0] == 9);
  std::set<long> fourteen{cert.sequence.back().left[0], cert.sequence.back().right[0]};
  CHECK(fourteen == std::set<long>{7});
  // every element decomposes inside K°
  const auto K = canonical_ideal(S);
  for (const auto& e : cert.sequence) {
    CHECK(K.contains(e.left));
    CHECK(lt(e.left, S.conductor()));
    CHECK(K.contains(e.right));
    CHECK(lt(e.right, S.conductor()));
  }
}

TEST_CASE("noether sequence: alpha = beta gives the empty certificate") {
  // S = {0} + tail at 4: rational nearly normal, alpha = beta = 4
  GoodSemigroup S(1, ValueVector{4}, {ValueVector{0}, ValueVector{4}}, "rnn");
  REQUIRE(validate(S).all_pass());
  const auto cert = build_noether_sequence(S);
  CHECK(cert.empty);
  CHECK(verify_theorem1(S).verified);
}

TEST_CASE("noether sequence: <4,6,7,8,9> has length beta - alpha = 2") {
  const auto S = from_numerical_generators({4, 6, 7, 8, 9});
  const auto cert = build_noether_sequence(S);
  CHECK(cert.r == 0);
  CHECK(cert.u == ValueVector{2});
  std::vector<long> seq;
  for (const auto& e : cert.sequence) seq.push_back(e.value[0]);
  CHECK(seq == std::vector<long>{6, 7});
  const auto K = canonical_ideal(S);
  for (const auto& e : cert.sequence) {
    CHECK(K.contains(e.left));
    CHECK(K.contains(e.right));
  }
}

TEST_CASE("surjectivity core: exhaustive corpus genus <= 8") {
  for (const auto& S : enumerate_numerical_semigroups(8)) {
    if (classify(S).gorenstein) continue;
    const auto res = verify_theorem1(S);
    CHECK(res.verified);
    if (!res.certificate.empty) {
      // s=1: the element set is exactly the interval [beta, 2beta-alpha-1]
      const long beta = S.conductor()[0];
      const long alpha = S.multiplicity()[0];
      std::set<long> got;
      for (const auto& e : res.certificate.sequence) got.insert(e.value[0]);
      std::set<long> want;
      for (long v = beta; v <= 2 * beta - alpha - 1; ++v) want.insert(v);
      CHECK(got == want);
    }
  }
}

TEST_CASE("max noether level: the worked example") {
  const auto S = from_numerical_generators({3, 7, 10, 11});
  const auto rep = max_noether_level(S, 2);
  CHECK(rep.surjective);
  CHECK(rep.h0 == 12);
  CHECK(rep.deg_at_point == 2);
  CHECK(rep.deg_at_infinity == 14);
  CHECK(rep.deg_total == 16);
  // the certificate covers t^8 .. t^14 with genuine products
  for (long v = 8; v <= 14; ++v) {
    const auto it = rep.products.find(v);
    REQUIRE(it != rep.products.end());
    long sum = 0;
    for (long part : it->second) {
      sum += part;
      CHECK(canonical_ideal(S).contains(part));
    }
    CHECK(sum == v);
  }
}

TEST_CASE("max noether level: n = 1 is the identity level") {
  const auto S = from_numerical_generators({3, 7, 10, 11});
  const auto rep = max_noether_level(S, 1);
  CHECK(rep.surjective);
  CHECK(rep.h0 == 5);  // h0(W) = g
}

TEST_CASE("max noether level: <3,5,7> levels 2 and 3") {
  const auto S = from_numerical_generators({3, 5, 7});
  CHECK(max_noether_level(S, 2).surjective);
  CHECK(max_noether_level(S, 3).surjective);
}

TEST_CASE("max noether level: hyperelliptic failure at level 2") {
  const auto S = from_numerical_generators({2, 7});
  const auto rep = max_noether_level(S, 2);
  CHECK(!rep.surjective);
  CHECK(rep.missing == std::vector<long>{7});
}

TEST_CASE("levels 1..4 surjective and Riemann-Roch consistent on the corpus") {
  for (const auto& S : enumerate_numerical_semigroups(8)) {
    const long g = numerical_genus(S);
    const long beta = S.conductor()[0];
    if (beta < 3) continue;  // degenerate: N and <2,3>
    const bool gon2 = S.contains(2L) || (beta - g == 1);
    const bool nonhyperelliptic = (beta - g == 1) ? true : !gon2;
    for (int n = 1; n <= 4; ++n) {
      const auto rep = max_noether_level(S, n);
      if (nonhyperelliptic) CHECK(rep.surjective);
      if (n >= 2) CHECK(rep.h0 == rep.deg_total + 1 - g);  // h1 vanishes
    }
  }
}

TEST_CASE("certificate soundness: brute-force decompositions re-verify") {
  const auto S = from_numerical_generators({4, 7, 10, 12, 13});
  const auto res = verify_theorem1(S);
  CHECK(res.verified);
  const auto K = canonical_ideal(S);
  for (const auto& [value, parts] : res.brute_force) {
    CHECK(parts.first + parts.second == value);
    CHECK(K.contains(parts.first));
    CHECK(K.contains(parts.second));
  }
}

TEST_CASE("max noether level rejects multibranch input") {
  GoodSemigroup node(2, ValueVector{1, 1}, {ValueVector{0, 0}, ValueVector{1, 1}}, "node");
  CHECK_THROWS_AS(max_noether_level(node, 2), Error);
}
