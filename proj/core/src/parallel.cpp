#include "wsmil/parallel.hpp"

#include <thread>
#include <vector>

namespace wsmil {

int chunk_count(std::size_t n, int workers) {
  if (workers <= 1 || n <= 1) return 1;
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), n));
}

void parallel_chunks(std::size_t n, int workers,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  int chunks = chunk_count(n, workers);
  if (chunks == 1) {
    fn(0, 0, n);
    return;
  }
  std::size_t per = n / chunks;
  std::size_t rem = n % chunks;
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  std::size_t begin = 0;
  for (int c = 0; c < chunks; ++c) {
    std::size_t len = per + (static_cast<std::size_t>(c) < rem ? 1 : 0);
    std::size_t end = begin + len;
    threads.emplace_back([fn, c, begin, end] { fn(static_cast<std::size_t>(c), begin, end); });
    begin = end;
  }
  for (auto& t : threads) t.join();
}

}  // namespace wsmil
