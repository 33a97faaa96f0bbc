#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mpconc::detail {

inline int resolve_threads(int requested, std::size_t items) {
  int n = requested > 0 ? requested : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  // Small jobs are not worth the thread start-up.
  const int useful = static_cast<int>(std::max<std::size_t>(1, items / 4));
  return std::max(1, std::min(n, useful));
}

// Calls fn(i) for i in [0, count). Work is strided over the threads; the
// first exception thrown by any worker is rethrown on the caller.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const int n = resolve_threads(threads, count);
  if (n == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = static_cast<std::size_t>(t); i < count; i += static_cast<std::size_t>(n)) fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace mpconc::detail
