#pragma once

#include <functional>

namespace padic {

// Worker count: PADIC_MOMENTS_THREADS if set to a positive integer,
// otherwise the hardware concurrency (at least 1).
unsigned thread_limit();

// Runs body(k) for k in [0, count).  The first exception thrown by any
// call is rethrown after all workers finish.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace padic
