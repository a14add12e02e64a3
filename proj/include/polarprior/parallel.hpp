#pragma once

#include <cstddef>
#include <functional>

namespace polarprior {

/// Worker count: POLARPRIOR_THREADS if set and positive, otherwise the
/// hardware concurrency.
std::size_t thread_count();

/// Runs body(i) for i in [0, n). Results must be written to per-index slots;
/// the first exception thrown by any body is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace polarprior
