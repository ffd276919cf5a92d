#ifndef NFORGE_PARALLEL_HPP
#define NFORGE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace nforge {

/// Worker count: NOETHER_FORGE_THREADS if set, else hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, n) on a small worker pool.  fn must be safe to
/// run concurrently for distinct i; results must be written to
/// preallocated slots so the outcome is order-independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace nforge

#endif
