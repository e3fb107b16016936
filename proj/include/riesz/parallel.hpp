#pragma once

#include <cstddef>
#include <functional>

namespace riesz {

/// Worker cap from RIESZ_EIG_THREADS; 0 or unset means hardware concurrency.
unsigned thread_cap();

/// Runs body(i) for i in [0, count) on up to thread_cap() threads. Each index
/// runs exactly once; the first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace riesz
