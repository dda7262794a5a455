#ifndef HESSCOH_PARALLEL_HPP
#define HESSCOH_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace hesscoh {

// Chunked parallel loop. Results must be merged by the caller in a
// thread-independent way (per-index output slots, integer sums, all-of
// reductions) so the outcome does not depend on the thread count.
inline void parallel_for(std::size_t begin, std::size_t end,
                         const std::function<void(std::size_t)>& body,
                         unsigned threads = 0) {
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  const std::size_t total = end > begin ? end - begin : 0;
  if (threads <= 1 || total < 64) {
    for (std::size_t i = begin; i < end; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{begin};
  const std::size_t chunk = std::max<std::size_t>(1, total / (threads * 8));
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t lo = next.fetch_add(chunk);
        if (lo >= end) return;
        std::size_t hi = std::min(end, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) body(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace hesscoh

#endif
