#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hodgerank {

/// Number of worker threads to use: explicit request, else the
/// HODGERANK_THREADS environment variable, else hardware concurrency.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HODGERANK_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(i) for i in [0, n). Each index must write only its own output
/// slot, so results are identical for any thread count. If a task throws,
/// the exception from the smallest failing index is rethrown.
inline void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  threads = resolve_threads(threads);
  if (threads > n) threads = n;
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }

  std::atomic<int> cursor{0};
  std::mutex err_mutex;
  std::exception_ptr first_error = nullptr;
  int first_error_index = n;

  auto worker = [&]() {
    for (;;) {
      const int i = cursor.fetch_add(1, std::memory_order_relaxed);
      if (i >= n) return;
      {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (first_error && i > first_error_index) return;
      }
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error || i < first_error_index) {
          first_error = std::current_exception();
          first_error_index = i;
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace hodgerank
