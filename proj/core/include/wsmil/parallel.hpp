#ifndef WSMIL_PARALLEL_HPP
#define WSMIL_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace wsmil {

// Runs fn over [0, n) split into one contiguous chunk per worker.
// workers <= 1 runs inline. Chunk boundaries depend only on (n, workers),
// so any reduction that merges per-chunk results in chunk order is
// deterministic regardless of thread scheduling.
void parallel_chunks(std::size_t n, int workers,
                     const std::function<void(std::size_t chunk, std::size_t begin, std::size_t end)>& fn);

int chunk_count(std::size_t n, int workers);

}  // namespace wsmil

#endif  // WSMIL_PARALLEL_HPP
