#pragma once

#include <cstddef>
#include <functional>

namespace odd {

// Runs fn(0..count-1) on up to `threads` workers pulling indices from a
// shared counter. Each index is processed exactly once by one worker, so any
// job that only writes to its own slot is deterministic whatever the thread
// count. threads <= 1 degrades to a plain loop. The first exception thrown
// by a job is rethrown after all workers stop.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

// ODDKERNEL_THREADS if set, else the hardware concurrency
int default_thread_count();

} // namespace odd
