#pragma once

#include <functional>

namespace lure {

/// Worker cap: LURE_REDUCE_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int max_threads();

/// Runs fn(0..n-1) on up to max_threads() workers. fn must write its result to
/// a per-index slot; execution order across indices is unspecified. The first
/// exception thrown by fn is rethrown after all workers finish.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace lure
