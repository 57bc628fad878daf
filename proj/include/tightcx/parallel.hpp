#pragma once

#include <cstddef>
#include <functional>

namespace tightcx {

/// Number of worker threads used by subset sweeps. Defaults to the hardware
/// concurrency; results never depend on this value.
std::size_t thread_count();
void set_thread_count(std::size_t n);

/// Splits [0, total) into contiguous chunks, one per worker, and calls
/// body(begin, end, chunk) for each. Chunk boundaries depend only on `total`
/// and the chunk count, so per-chunk partial results can be merged in chunk
/// order for a thread-count-independent reduction.
void parallel_chunks(std::size_t total, std::size_t chunks,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace tightcx
