#include "nforge/semigroup_ops.hpp"

#include <algorithm>
#include <set>

#include "nforge/errors.hpp"

namespace nforge {

std::vector<ValueVector> delta_set(const BoxedSet& E, const ValueVector& a) {
  const int s = E.branches();
  std::vector<ValueVector> out;
  ValueVector hi(E.conductor);
  for (int i = 0; i < s; ++i) hi[i] += 1;
  for_each_in_box(E.lo, hi, [&](const ValueVector& b) {
    if (!E.contains(b)) return;
    for (int i = 0; i < s; ++i) {
      if (b[i] != a[i]) continue;
      bool strict = true;
      for (int j = 0; j < s && strict; ++j)
        if (j != i && b[j] <= a[j]) strict = false;
      if (strict) {
        out.push_back(b);
        return;
      }
    }
  });
  return out;
}

std::vector<ValueVector> delta_set(const GoodSemigroup& S, const ValueVector& a) {
  return delta_set(S.boxed(), a);
}

std::vector<ValueVector> delta_set(const IdealValueSet& E, const ValueVector& a) {
  return delta_set(E.boxed(), a);
}

namespace {

bool delta_empty(const BoxedSet& E, const ValueVector& a) { return delta_set(E, a).empty(); }

}  // namespace

IdealValueSet canonical_ideal(const GoodSemigroup& S) {
  const int s = S.branches();
  const ValueVector zero(s, 0);
  const ValueVector gamma = S.frobenius();
  std::vector<ValueVector> els;
  const BoxedSet box = S.boxed();
  for_each_in_box(zero, S.conductor(), [&](const ValueVector& a) {
    if (delta_empty(box, gamma - a)) els.push_back(a);
  });
  return IdealValueSet(S, make_boxed(zero, S.conductor(), std::move(els)));
}

std::vector<ValueVector> saturated_chain(const BoxedSet& E, const ValueVector& from,
                                         const ValueVector& to, bool lex_max_ties) {
  std::vector<ValueVector> chain{from};
  ValueVector cur = from;
  while (cur != to) {
    // Candidates strictly above cur; a minimal one makes the step
    // saturated (nothing of E fits strictly between).
    std::vector<ValueVector> above;
    for (const auto& x : E.elements)
      if (lt(cur, x) && leq(x, to)) above.push_back(x);
    std::optional<ValueVector> next;
    for (const auto& x : above) {
      bool minimal = true;
      for (const auto& y : above)
        if (lt(y, x)) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      if (!next)
        next = x;
      else if (lex_max_ties ? (*next < x) : (x < *next))
        next = x;
    }
    if (!next)
      fail(errc::chain_length_mismatch,
           "no chain step above " + cur.str() + " toward " + to.str());
    chain.push_back(*next);
    cur = *next;
  }
  return chain;
}

namespace {

long chain_length(const BoxedSet& E, const ValueVector& to) {
  const auto a = saturated_chain(E, E.lo, to, false);
  const auto b = saturated_chain(E, E.lo, to, true);
  if (a.size() != b.size())
    fail(errc::chain_length_mismatch,
         "saturated chains of different lengths (" + std::to_string(a.size() - 1) + " vs " +
             std::to_string(b.size() - 1) + "); input violates the good-set axioms");
  return static_cast<long>(a.size()) - 1;
}

}  // namespace

long distance(const BoxedSet& E, const BoxedSet& F) {
  const ValueVector top = componentwise_max(E.conductor, F.conductor);
  const BoxedSet Ee = E.extended_to(top);
  const BoxedSet Fe = F.extended_to(top);
  for (const auto& f : Fe.elements)
    if (!Ee.contains(f))
      fail(errc::not_nested, "element " + f.str() + " of the inner set escapes the outer set");

  const long d = chain_length(Ee, top) - chain_length(Fe, top);
  if (E.branches() == 1) {
    // Cross-check the chain count against plain cardinality.
    long card = 0;
    for (const auto& e : Ee.elements)
      if (!Fe.contains(e)) ++card;
    if (card != d)
      fail(errc::chain_length_mismatch,
           "s=1 distance " + std::to_string(d) + " disagrees with cardinality " +
               std::to_string(card));
  }
  return d;
}

long distance(const IdealValueSet& E, const IdealValueSet& F) {
  return distance(E.boxed(), F.boxed());
}

SumsetResult sumset(const BoxedSet& E, const BoxedSet& F, const ValueVector& box_hi,
                    bool track) {
  SumsetResult out;
  const ValueVector lo = E.lo + F.lo;
  // Summands beyond box_hi - lo(other) cannot contribute below box_hi.
  const BoxedSet Ee = E.extended_to(componentwise_max(E.conductor, box_hi - F.lo));
  const BoxedSet Fe = F.extended_to(componentwise_max(F.conductor, box_hi - E.lo));
  std::set<ValueVector> sums;
  for (const auto& e : Ee.elements)
    for (const auto& f : Fe.elements) {
      const ValueVector v = e + f;
      if (!leq(v, box_hi)) continue;
      if (sums.insert(v).second && track) out.decomposition.emplace(v, std::make_pair(e, f));
    }
  out.set = make_boxed(lo, box_hi, std::vector<ValueVector>(sums.begin(), sums.end()));
  return out;
}

NFoldSumsetResult n_fold_sumset(const BoxedSet& E, int n, const ValueVector& box_hi,
                                bool track) {
  if (n < 1) fail(errc::invalid_argument, "n_fold_sumset needs n >= 1");
  NFoldSumsetResult out;
  BoxedSet acc = E.extended_to(componentwise_max(E.conductor, box_hi));
  // restrict to box
  {
    std::vector<ValueVector> inside;
    for (const auto& e : acc.elements)
      if (leq(e, box_hi)) inside.push_back(e);
    acc = make_boxed(acc.lo, box_hi, std::move(inside));
  }
  if (track)
    for (const auto& e : acc.elements) out.decomposition[e] = {e};

  for (int k = 2; k <= n; ++k) {
    SumsetResult step = sumset(acc, E, box_hi, track);
    if (track) {
      std::map<ValueVector, std::vector<ValueVector>> next;
      for (const auto& [v, pair] : step.decomposition) {
        std::vector<ValueVector> parts = out.decomposition.at(pair.first);
        parts.push_back(pair.second);
        next.emplace(v, std::move(parts));
      }
      out.decomposition = std::move(next);
    }
    acc = std::move(step.set);
  }
  out.set = std::move(acc);
  return out;
}

namespace {

// Additive closure of the given seed elements plus the conductor tail,
// re-truncated at the closure's own (minimal) conductor.  Exact for s=1;
// for s >= 2 the closure is additionally repaired to satisfy min-closure
// and (E2) by inserting the pointwise-minimal admissible witnesses.
GoodSemigroup close_to_semigroup(int s, const std::vector<ValueVector>& seeds,
                                 const ValueVector& tail_from) {
  // Work box: far enough beyond the tail corner that the tail is visible.
  ValueVector hi(tail_from);
  for (int i = 0; i < s; ++i) hi[i] = 2 * std::max(1L, hi[i]) + 2;

  std::set<ValueVector> cur(seeds.begin(), seeds.end());
  cur.insert(ValueVector(s, 0));
  for_each_in_box(tail_from, hi, [&](const ValueVector& a) { cur.insert(a); });

  auto clamp_in = [&](const ValueVector& a) {
    return componentwise_min(a, hi);
  };

  bool changed = true;
  int guard = 0;
  while (changed) {
    if (++guard > 64) fail(errc::no_stabilization, "semigroup closure failed to stabilize");
    changed = false;
    std::vector<ValueVector> els(cur.begin(), cur.end());
    for (size_t x = 0; x < els.size(); ++x) {
      for (size_t y = x; y < els.size(); ++y) {
        const ValueVector sum = clamp_in(els[x] + els[y]);
        if (cur.insert(sum).second) changed = true;
        if (s >= 2) {
          const ValueVector m = componentwise_min(els[x], els[y]);
          if (cur.insert(m).second) changed = true;
        }
      }
    }
    if (s >= 2) {
      // (E2) repair: insert the smallest admissible witness.
      els.assign(cur.begin(), cur.end());
      for (size_t x = 0; x < els.size(); ++x)
        for (size_t y = x + 1; y < els.size(); ++y) {
          const ValueVector &a = els[x], &b = els[y];
          for (int i = 0; i < s; ++i) {
            if (a[i] != b[i] || a[i] >= hi[i]) continue;
            bool found = false;
            for (const auto& eps : cur) {
              if (eps[i] <= a[i]) continue;
              bool ok = true;
              for (int j = 0; j < s && ok; ++j) {
                if (j == i) continue;
                const long m = std::min(a[j], b[j]);
                if (a[j] != b[j] ? eps[j] != m : eps[j] < m) ok = false;
              }
              if (ok) {
                found = true;
                break;
              }
            }
            if (!found) {
              ValueVector eps = componentwise_min(a, b);
              eps[i] = a[i] + 1;
              cur.insert(clamp_in(eps));
              changed = true;
            }
          }
        }
    }
  }

  // Minimal conductor within the work box: shrink from hi coordinate-wise.
  auto tail_full = [&](const ValueVector& c) {
    bool full = true;
    for_each_in_box(c, hi, [&](const ValueVector& a) {
      if (full && !cur.count(a)) full = false;
    });
    return full;
  };
  ValueVector beta = hi;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int i = 0; i < s; ++i) {
      while (beta[i] > 0) {
        ValueVector c = beta - unit_vector(s, i);
        if (tail_full(c)) {
          beta = c;
          shrunk = true;
        } else {
          break;
        }
      }
    }
  }

  std::vector<ValueVector> small;
  for (const auto& a : cur)
    if (leq(a, beta)) small.push_back(a);
  return GoodSemigroup(s, beta, std::move(small), "closure");
}

}  // namespace

GoodSemigroup blowup_semigroup(const GoodSemigroup& S) {
  const IdealValueSet K = canonical_ideal(S);
  std::vector<ValueVector> seeds = K.strict_part();
  GoodSemigroup B = close_to_semigroup(S.branches(), seeds, S.conductor());
  if (!validate(B).all_pass())
    fail(errc::no_stabilization,
         "blowup closure is not a good semigroup: " + validate(B).summary());
  return B;
}

Classification classify(const GoodSemigroup& S) {
  Classification out;
  const IdealValueSet K = canonical_ideal(S);
  out.delta = distance(full_box_ideal(S).boxed(), S.boxed());
  out.eta = distance(K.boxed(), S.boxed());
  out.gorenstein = (out.eta == 0);
  out.kunz = (out.eta == 1);
  try {
    GoodSemigroup B = blowup_semigroup(S);
    out.mu = distance(B.boxed(), K.boxed());
    out.blowup = std::move(B);
    out.almost_gorenstein = (*out.mu <= 1);
  } catch (const Error&) {
    if (S.branches() == 1) throw;  // s=1 closure is exact; a failure is a bug
    // s >= 2: the closure model could not be completed; mu stays unreported.
  }
  return out;
}

bool is_symmetric_numerical(const GoodSemigroup& S) {
  if (S.branches() != 1) fail(errc::unsupported_branch_count, "symmetry test needs s=1");
  const long gamma = S.frobenius()[0];
  for (long a = 0; a <= gamma; ++a)
    if (S.contains(a) == S.contains(ValueVector{gamma - a})) return false;
  return true;
}

}  // namespace nforge
