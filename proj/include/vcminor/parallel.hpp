#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace vcminor {

/// Runs fn(i) for i in [0, count) on up to `threads` workers. With threads
/// <= 1 this is a plain loop. fn must handle its own synchronization for any
/// shared writes.
template <class F>
void parallel_for(int count, int threads, F&& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  int workers = std::min(threads, count);
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace vcminor
