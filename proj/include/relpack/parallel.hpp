#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace relpack {

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Callers collect
// results into preallocated slots indexed by i, so output order never
// depends on scheduling.
inline void parallel_for(int count, int jobs,
                         const std::function<void(int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  int threads = std::min(jobs, count);
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace relpack
