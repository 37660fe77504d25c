#include "walkarea/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace walkarea {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("WALKAREA_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1024) return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_chunks(std::uint64_t total, int num_chunks, int threads,
                     const std::function<void(int, std::uint64_t,
                                              std::uint64_t)>& fn) {
  if (num_chunks < 1) num_chunks = 1;
  auto chunk_begin = [&](int i) {
    // Boundaries depend on (total, num_chunks) only -- never on `threads`.
    return total / num_chunks * i + std::min<std::uint64_t>(i, total % num_chunks);
  };

  if (threads <= 1 || num_chunks == 1) {
    for (int i = 0; i < num_chunks; ++i) fn(i, chunk_begin(i), chunk_begin(i + 1));
    return;
  }

  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= num_chunks) return;
      try {
        fn(i, chunk_begin(i), chunk_begin(i + 1));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  int nworkers = std::min(threads, num_chunks);
  pool.reserve(static_cast<std::size_t>(nworkers));
  for (int t = 0; t < nworkers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace walkarea
