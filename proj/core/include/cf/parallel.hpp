/// \file parallel.hpp
/// \brief Static range partitioning over std::thread, capped by CF_THREADS.
#pragma once

#include <cstddef>
#include <functional>

namespace cf {

/// Worker count: hardware concurrency, capped by the CF_THREADS environment variable.
int thread_count();

/// Calls body(begin, end) on contiguous chunks covering [0, n). Chunks are fixed
/// by n and the worker count, so results written per index are deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace cf
