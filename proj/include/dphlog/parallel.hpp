#pragma once

#include <cstddef>
#include <functional>

namespace dphlog {

/// Worker count: explicit value if positive, else DP_HLOG_THREADS, else the
/// hardware concurrency (at least 1).
int resolve_threads(int requested = 0);

/// Splits [0, n) into contiguous chunks and runs fn(begin, end, worker) on up
/// to `threads` threads. Exceptions from workers are rethrown in the caller.
void parallel_chunks(std::size_t n, int threads,
                     const std::function<void(std::size_t, std::size_t, int)>& fn);

}  // namespace dphlog
