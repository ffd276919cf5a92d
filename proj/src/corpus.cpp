#include "nforge/corpus.hpp"

#include <algorithm>

#include "nforge/errors.hpp"

namespace nforge {

namespace {

constexpr int kGenusGuard = 12;

struct Node {
  std::vector<char> in;  // membership up to limit
  long frobenius;        // -1 for N
  int genus;
};

long conductor_of(const std::vector<char>& in) {
  long beta = 0;
  for (long v = static_cast<long>(in.size()) - 1; v >= 1; --v)
    if (!in[v]) {
      beta = v + 1;
      break;
    }
  return beta;
}

// Minimal generators: m in S\{0} not a sum of two smaller nonzero members.
std::vector<long> minimal_generators(const std::vector<char>& in) {
  std::vector<long> gens;
  const long n = static_cast<long>(in.size());
  for (long m = 1; m < n; ++m) {
    if (!in[m]) continue;
    bool decomposable = false;
    for (long a = 1; a < m && !decomposable; ++a)
      if (in[a] && in[m - a]) decomposable = true;
    if (!decomposable) gens.push_back(m);
  }
  return gens;
}

void emit(const Node& node, std::vector<GoodSemigroup>& out) {
  const long beta = conductor_of(node.in);
  std::vector<ValueVector> small;
  for (long v = 0; v <= beta; ++v)
    if (node.in[v]) small.push_back(ValueVector{v});
  out.emplace_back(1, ValueVector{beta}, std::move(small), "corpus");
}

void expand(const Node& node, int genus_max, std::vector<GoodSemigroup>& out) {
  emit(node, out);
  if (node.genus >= genus_max) return;
  for (long m : minimal_generators(node.in)) {
    if (m <= node.frobenius) continue;  // keep it a semigroup
    Node child = node;
    child.in[m] = 0;
    child.frobenius = std::max(node.frobenius, m);
    child.genus = node.genus + 1;
    expand(child, genus_max, out);
  }
}

}  // namespace

std::vector<GoodSemigroup> enumerate_numerical_semigroups(int genus_max) {
  if (genus_max < 0) fail(errc::invalid_argument, "negative genus bound");
  if (genus_max > kGenusGuard)
    fail(errc::guard_exceeded,
         "genus bound " + std::to_string(genus_max) + " exceeds the guard (" +
             std::to_string(kGenusGuard) + ")");
  // Frobenius number of a genus-g semigroup is at most 2g-1.
  const long limit = 2L * std::max(genus_max, 1) + 2;
  Node root;
  root.in.assign(limit + 1, 1);
  root.frobenius = -1;
  root.genus = 0;
  std::vector<GoodSemigroup> out;
  expand(root, genus_max, out);
  return out;
}

long numerical_genus(const GoodSemigroup& S) {
  if (S.branches() != 1) fail(errc::unsupported_branch_count, "numerical_genus needs s=1");
  long g = 0;
  for (long v = 0; v < S.conductor()[0]; ++v)
    if (!S.contains(v)) ++g;
  return g;
}

std::vector<long> minimal_generators_of(const GoodSemigroup& S) {
  if (S.branches() != 1) fail(errc::unsupported_branch_count, "generators need s=1");
  const long beta = S.conductor()[0];
  if (beta == 0) return {1};
  const long limit = beta + S.multiplicity()[0] + 1;
  std::vector<char> in(limit + 1, 0);
  for (long v = 0; v <= limit; ++v) in[v] = S.contains(v) ? 1 : 0;
  return minimal_generators(in);
}

}  // namespace nforge
