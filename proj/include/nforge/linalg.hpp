#ifndef NFORGE_LINALG_HPP
#define NFORGE_LINALG_HPP

#include <gmpxx.h>

#include <vector>

namespace nforge {

using RatMatrix = std::vector<std::vector<mpq_class>>;
using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Exact rank over Q by Gaussian elimination.
long rank_rational(RatMatrix m);

/// Exact rank over Z by fraction-free (Bareiss) elimination.
long rank_bareiss(IntMatrix m);

/// Incremental column-space basis: feed columns one at a time, rank grows
/// when the new column is independent of the ones seen so far.
class IncrementalRank {
 public:
  /// Returns true when the column increased the rank.
  bool add_column(std::vector<mpq_class> col);
  long rank() const { return static_cast<long>(basis_.size()); }

 private:
  std::vector<std::vector<mpq_class>> basis_;  // reduced columns
  std::vector<long> pivot_;                    // pivot row per basis column
};

}  // namespace nforge

#endif
