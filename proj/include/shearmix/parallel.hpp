#pragma once
// Deterministic parallelism: static index ranges, per-index output slots, no
// atomics. Floating-point reductions are done by the caller in index order,
// so results are independent of the worker count.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace shearmix::par {

inline int& workers_slot() {
  static int w = [] {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<int>(std::min(hw, 8u));
  }();
  return w;
}

inline int default_workers() { return workers_slot(); }
inline void set_default_workers(int n) { workers_slot() = n < 1 ? 1 : n; }

/// Runs fn(lo, hi) over a static partition of [0, n). workers <= 0 uses the
/// process default. fn must only write to per-index state.
template <class Fn>
void parallel_chunks(std::int64_t n, Fn&& fn, int workers = 0) {
  if (n <= 0) return;
  if (workers <= 0) workers = default_workers();
  workers = static_cast<int>(std::min<std::int64_t>(workers, n));
  if (workers <= 1) {
    fn(std::int64_t{0}, n);
    return;
  }
  const std::int64_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = static_cast<std::int64_t>(w) * chunk;
    const std::int64_t hi = std::min<std::int64_t>(lo + chunk, n);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

template <class Fn>
void parallel_for(std::int64_t n, Fn&& fn, int workers = 0) {
  parallel_chunks(
      n,
      [&fn](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t i = lo; i < hi; ++i) fn(i);
      },
      workers);
}

}  // namespace shearmix::par
