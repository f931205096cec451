#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace crystal::detail {

// Runs work(begin, end, slot) over contiguous chunks of [0, n) on up to
// `jobs` threads. Each slot is owned by exactly one thread; the caller
// reduces the slots afterwards in index order. The first exception thrown
// by any worker is rethrown.
template <typename Slot, typename Work>
std::vector<Slot> parallel_chunks(std::size_t n, unsigned jobs, Work work) {
  unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n ? n : 1)));
  std::vector<Slot> slots(threads);
  if (threads == 1) {
    work(std::size_t{0}, n, slots[0]);
    return slots;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t begin = std::min(n, t * chunk), end = std::min(n, begin + chunk);
    pool.emplace_back([&, t, begin, end] {
      try {
        work(begin, end, slots[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return slots;
}

}  // namespace crystal::detail
