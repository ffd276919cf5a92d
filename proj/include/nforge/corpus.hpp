#ifndef NFORGE_CORPUS_HPP
#define NFORGE_CORPUS_HPP

#include <vector>

#include "nforge/good_semigroup.hpp"

namespace nforge {

/// All numerical semigroups of genus <= genus_max, enumerated by the
/// standard gap tree (children remove minimal generators above the
/// Frobenius number), in a deterministic order.  Guarded at genus 12.
std::vector<GoodSemigroup> enumerate_numerical_semigroups(int genus_max);

/// Genus (gap count) of a numerical semigroup.
long numerical_genus(const GoodSemigroup& S);

/// Minimal generating set of a numerical semigroup.
std::vector<long> minimal_generators_of(const GoodSemigroup& S);

}  // namespace nforge

#endif
