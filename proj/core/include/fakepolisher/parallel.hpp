#pragma once

#include <cstddef>
#include <functional>

namespace fakepolisher {

/// Worker count: hardware concurrency, capped by FAKEPOLISHER_THREADS if set.
unsigned worker_count();

/// Runs body(i) for i in [0, n) over worker_count() threads. Iterations must
/// write disjoint outputs; the first exception thrown is rethrown here.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace fakepolisher
