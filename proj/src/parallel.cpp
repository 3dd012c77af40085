#include "bellwit/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace bellwit {

int worker_count() {
  int n = 0;
  if (const char* env = std::getenv("BELLWIT_THREADS")) {
    try {
      n = std::stoi(env);
    } catch (...) {
      n = 0;
    }
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, n);
}

void parallel_chunks(std::uint64_t n,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
  const int workers = worker_count();
  if (workers <= 1 || n < 2) {
    fn(0, 0, n);
    return;
  }
  const std::uint64_t per = (n + workers - 1) / workers;
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(n, w * per);
    const std::uint64_t end = std::min(n, begin + per);
    threads.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
  }
  for (auto& th : threads) th.join();
}

}  // namespace bellwit
