#pragma once

// Deterministic parallel row scheduling: static block partition over rows,
// disjoint writes, no shared accumulators, so results never depend on the
// thread count or interleaving.

#include <functional>
#include <thread>
#include <vector>

namespace juliadim {

inline int default_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : int(n);
}

template <typename Fn>
void parallel_rows(int rows, int threads, Fn&& fn) {
  if (threads < 1) threads = 1;
  if (threads == 1 || rows <= 1) {
    for (int r = 0; r < rows; ++r) fn(r);
    return;
  }
  if (threads > rows) threads = rows;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    const int lo = int(std::int64_t(rows) * t / threads);
    const int hi = int(std::int64_t(rows) * (t + 1) / threads);
    pool.emplace_back([lo, hi, &fn] {
      for (int r = lo; r < hi; ++r) fn(r);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace juliadim
