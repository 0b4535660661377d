#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace mdslab {

// Worker count used by the enumeration kernels. Defaults to MDSLAB_THREADS
// when set, otherwise the hardware concurrency.
unsigned thread_count();
void set_thread_count(unsigned n);

// Splits [0, total) into contiguous ranges and runs body(worker, begin, end)
// on each. Runs inline when a single worker is enough. The first exception
// thrown by any worker is rethrown on the caller's thread.
template <class Body>
void parallel_ranges(std::uint64_t total, Body&& body, std::uint64_t min_chunk = 4096) {
  unsigned workers = thread_count();
  if (total == 0) return;
  std::uint64_t max_workers = std::max<std::uint64_t>(1, total / min_chunk);
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, max_workers));
  if (workers <= 1) {
    body(0u, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  std::uint64_t step = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t b = w * step, e = std::min(total, b + step);
    if (b >= e) break;
    threads.emplace_back([&, w, b, e] {
      try {
        body(w, b, e);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace mdslab
