#pragma once

#include <cstddef>
#include <functional>

namespace flowguard {

// Number of worker threads used by parallel_for when the caller passes 0.
// Reads FLOWGUARD_THREADS, falling back to hardware_concurrency.
std::size_t default_thread_count();

// Runs body(i) for i in [0, n) on up to `threads` workers. Work is handed out
// in index order; bodies must write only to slots owned by their index, which
// keeps results independent of the thread count. The first exception thrown
// by any body is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, std::size_t threads = 0);

} // namespace flowguard
