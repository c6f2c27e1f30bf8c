#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace mgfil {

// Run fn(k) for k in [0, n) on the given number of threads.  Work items must
// be independent; the first exception wins and is rethrown after the join.
template <class Fn>
void parallel_for(std::int64_t n, int threads, Fn&& fn) {
  if (threads > n) threads = static_cast<int>(n);
  if (threads <= 1) {
    for (std::int64_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto worker = [&] {
    try {
      while (true) {
        const std::int64_t k = next.fetch_add(1);
        if (k >= n) return;
        fn(k);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!first_error) first_error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace mgfil
