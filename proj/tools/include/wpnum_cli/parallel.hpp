#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace wpnum::cli {

/// Worker count: WPNUM_WORKERS if set to a positive integer, else the
/// hardware concurrency (at least 1).
int default_workers();

/// Evaluate f(0..n-1) on up to `workers` threads. Results come back in index
/// order, so any reduction over them is independent of scheduling. The first
/// exception thrown by a task is rethrown after all workers finish.
template <class F>
auto parallel_map(int n, int workers, F&& f) -> std::vector<std::invoke_result_t<F&, int>> {
  using R = std::invoke_result_t<F&, int>;
  std::vector<R> out(static_cast<std::size_t>(n > 0 ? n : 0));
  if (n <= 0) return out;
  const int w = std::max(1, std::min(workers, n));
  if (w == 1) {
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(i);
    return out;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        out[static_cast<std::size_t>(i)] = f(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(w - 1));
  for (int t = 1; t < w; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace wpnum::cli
