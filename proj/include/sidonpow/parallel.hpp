#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sidonpow {

/// Runs body(worker) on `workers` threads (inline when workers <= 1) and
/// rethrows the first exception after all threads have joined.
template <typename Body>
void run_workers(unsigned workers, Body&& body) {
  if (workers <= 1) {
    body(0u);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          body(w);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

/// Splits [0, count) into contiguous blocks, one per worker; body(begin, end,
/// worker). Block boundaries depend only on count and workers.
template <typename Body>
void parallel_blocks(std::size_t count, unsigned workers, Body&& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  run_workers(workers, [&](unsigned w) {
    std::size_t begin = count * w / workers;
    std::size_t end = count * (w + 1) / workers;
    if (begin < end) body(begin, end, w);
  });
}

}  // namespace sidonpow
