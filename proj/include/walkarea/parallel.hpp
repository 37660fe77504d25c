#pragma once

#include <cstdint>
#include <functional>

namespace walkarea {

// Thread-count resolution: explicit request > WALKAREA_THREADS env var >
// hardware_concurrency(), clamped to >= 1.  requested <= 0 means "unset".
int resolve_threads(int requested);

// Runs fn(chunk_index, begin, end) over [0, total) split into num_chunks
// half-open ranges, distributing chunks across `threads` workers.  Chunk
// boundaries depend only on (total, num_chunks) -- never on the thread
// count -- so per-chunk results can be merged in chunk order for
// bit-identical output at any thread count.  Exceptions from workers are
// rethrown on the calling thread.
void parallel_chunks(std::uint64_t total, int num_chunks, int threads,
                     const std::function<void(int, std::uint64_t,
                                              std::uint64_t)>& fn);

}  // namespace walkarea
