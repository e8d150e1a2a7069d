#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace ggm {

// Deterministic parallel map over [0, n): contiguous chunks run on separate
// threads, results land in index order. fn must be safe to call concurrently
// on distinct indices (all relation/trial work here is pure).
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, Fn fn, std::size_t min_per_thread = 32) {
  std::vector<T> out(n);
  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t want = min_per_thread == 0 ? n : n / min_per_thread;
  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(hw ? hw : 1, want));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  const std::size_t chunk = (n + threads - 1) / threads;
  std::vector<std::future<void>> pending;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pending.push_back(std::async(std::launch::async, [&out, &fn, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
    }));
  }
  for (auto& f : pending) f.get();
  return out;
}

}  // namespace ggm
