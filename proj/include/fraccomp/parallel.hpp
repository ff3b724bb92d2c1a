#ifndef FRACCOMP_PARALLEL_HPP
#define FRACCOMP_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace fraccomp {

/// Runs body(i) for i in [0, count) on up to n_threads workers. Results must
/// be written to caller-owned slots indexed by i, so aggregation is
/// order-independent and output is identical for any thread count.
inline void parallel_for(std::size_t count,
                         const std::function<void(std::size_t)>& body,
                         int n_threads) {
  if (count == 0) return;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::size_t workers = (n_threads > 0) ? static_cast<std::size_t>(n_threads)
                                        : static_cast<std::size_t>(hw);
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace fraccomp

#endif  // FRACCOMP_PARALLEL_HPP
