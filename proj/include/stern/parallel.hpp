#pragma once

#include <cstddef>
#include <functional>

namespace stern {

// Worker count from STERN_THREADS, else the hardware concurrency.
unsigned thread_count();

// Calls task(i) for i in [0, count) on up to `threads` workers. Exceptions
// are rethrown (the one for the lowest index wins).
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task);

}  // namespace stern
