#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tropid {

  // Calls fn(i) for every i in [0, n), spread over `jobs` threads that pull
  // indices from a shared counter. The first exception thrown by any worker
  // is rethrown on the calling thread after all workers stop.
  template <typename Fn>
  void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || n < 2) {
      for (std::size_t i = 0; i < n; ++i) {
        fn(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool>        stop{false};
    std::exception_ptr       error;
    std::mutex               error_mtx;
    auto                     worker = [&] {
      while (!stop.load(std::memory_order_relaxed)) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) {
          return;
        }
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mtx);
          if (!error) {
            error = std::current_exception();
          }
          stop = true;
        }
      }
    };
    std::vector<std::thread> pool;
    unsigned                 count = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

}  // namespace tropid
