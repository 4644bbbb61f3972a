#pragma once

#include <cstddef>
#include <functional>

namespace slidetex {

/// Number of worker threads to use; `requested` 0 means hardware concurrency.
int resolve_threads(int requested);

/// Runs fn(i) for i in [0, count). With threads > 1 the indices are pulled
/// from a shared counter; callers must write results into per-index slots so
/// the outcome is independent of scheduling. The first exception thrown by
/// any worker is rethrown on the calling thread after all workers join.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace slidetex
