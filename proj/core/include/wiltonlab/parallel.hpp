#pragma once

#include <cstddef>
#include <functional>

namespace wiltonlab {

/// Worker count: WILTONLAB_THREADS if set and positive, else the hardware
/// concurrency (at least 1).
unsigned workerCount();

/// Runs body(i) for i in [0, count). Iterations are split into contiguous
/// blocks across workers; each body call must write only to its own slot.
/// The first exception thrown by any body is rethrown on the caller's thread.
void parallelFor(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace wiltonlab
