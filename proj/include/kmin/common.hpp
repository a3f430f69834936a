#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace kmin {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default node budget for searches; KMIN_BUDGET overrides.
inline std::size_t default_budget() {
  if (const char* env = std::getenv("KMIN_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 20'000'000;
}

inline unsigned& thread_setting() {
  static unsigned n = 0;
  return n;
}
inline void set_threads(unsigned n) { thread_setting() = n; }
inline unsigned thread_count() {
  unsigned n = thread_setting();
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

// Runs f(i) for i in [0, n) on thread_count() workers. The first exception
// thrown by any task is rethrown after all workers stop.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  unsigned workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!failed) {
        std::size_t i = next++;
        if (i >= n) break;
        try {
          f(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace kmin
