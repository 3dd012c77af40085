#ifndef BELLWIT_PARALLEL_HPP
#define BELLWIT_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace bellwit {

/// Worker count: BELLWIT_THREADS if set and > 0, hardware concurrency
/// otherwise (BELLWIT_THREADS=0 also means auto).
int worker_count();

/// Runs fn(chunk_index, begin, end) over [0, n) split into contiguous
/// chunks, one per worker. Chunks are disjoint and cover the range; callers
/// reduce the per-chunk results in chunk order, which keeps the outcome
/// independent of the worker count.
void parallel_chunks(std::uint64_t n,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn);

}  // namespace bellwit

#endif
