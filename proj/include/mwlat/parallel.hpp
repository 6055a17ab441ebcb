#pragma once

#include <cstddef>
#include <functional>

namespace mwlat {

// Worker count: hardware concurrency, capped by MWLAT_THREADS when set.
std::size_t worker_count();

// Runs fn(i) for i in [0, n) on up to worker_count() threads. Exceptions are rethrown
// (the one from the smallest index wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace mwlat
