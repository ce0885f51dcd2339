#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace braidq {

/// Runs fn(0..n-1) on up to `threads` workers. Callers own output slots by
/// index, so merged results are independent of scheduling.
template <typename Fn>
void parallel_for(int n, int threads, Fn&& fn) {
  if (n <= 0) return;
  if (threads <= 1 || n == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  int k = std::min(threads, n);
  pool.reserve(static_cast<size_t>(k));
  for (int t = 0; t < k; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace braidq
