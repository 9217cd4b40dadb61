#pragma once

#include <cstddef>
#include <functional>

namespace ncl {

// Worker cap: NONCOMP_LAB_THREADS when set, hardware concurrency otherwise.
std::size_t worker_count();

// Runs fn(0..n-1) across workers. Work items must be independent and pure
// per index; results keyed by index stay deterministic regardless of the
// worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ncl
