#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <span>
#include <thread>
#include <vector>

namespace wellconn {

/// Runs task(i) for every i in `order` on up to `workers` threads. Each index
/// is handled exactly once; callers write results into per-index slots so the
/// outcome does not depend on scheduling. If tasks throw, the exception of the
/// earliest index in `order` is rethrown after all workers finish.
template <typename Task>
void parallel_for(std::span<const std::size_t> order, unsigned workers, Task&& task) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(order.size())));
  std::vector<std::exception_ptr> errors(order.size());
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t k; (k = next.fetch_add(1, std::memory_order_relaxed)) < order.size();) {
      try {
        task(order[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace wellconn
