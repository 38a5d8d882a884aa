#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace gcm {

// Worker cap: GCM_LAB_THREADS if set (values < 1 mean 1), else the hardware
// concurrency. Results are merged by index, so the outcome is identical for
// every cap.
int worker_cap();

// Evaluates fn(0..count-1), possibly concurrently, returning results in index
// order. fn must be pure in its index (trial seeds are derived per index).
template <typename R>
std::vector<R> parallel_map(int count, const std::function<R(int)>& fn) {
  std::vector<R> out(static_cast<std::size_t>(count > 0 ? count : 0));
  if (count <= 0) return out;
  int workers = worker_cap();
  if (workers > count) workers = count;
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error = nullptr;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace gcm
