#pragma once

#include <cstddef>
#include <functional>

namespace dtqw {

/// Worker count for grid scans: DTQW_WORKERS if set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
[[nodiscard]] std::size_t worker_count();

/// Calls body(i) for every i in [0, n) using up to worker_count() threads.
/// Indices are split into contiguous blocks; callers write results by index,
/// so output order never depends on scheduling. The first exception thrown by
/// any worker is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace dtqw
