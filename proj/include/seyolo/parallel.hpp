#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace seyolo {

// Worker count for a request of `requested` threads (0 = auto), capped by the
// SEYOLO_THREADS environment variable when set.
inline int resolve_threads(int requested) {
  int n = requested;
  if (n <= 0) {
    n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
  }
  if (const char* env = std::getenv("SEYOLO_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

// Static block partition of [0, n). Each index is handled by exactly one
// worker with the same inner iteration order regardless of thread count, so
// results are bit-identical for any `threads`.
inline void parallel_for(std::int64_t n, int threads,
                         const std::function<void(std::int64_t, std::int64_t)>& body) {
  if (n <= 0) return;
  std::int64_t workers = std::min<std::int64_t>(threads <= 1 ? 1 : threads, n);
  if (workers <= 1) {
    body(0, n);
    return;
  }
  const std::int64_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers) - 1);
  for (std::int64_t w = 1; w < workers; ++w) {
    const std::int64_t begin = w * chunk;
    const std::int64_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  body(0, std::min(n, chunk));
  for (auto& t : pool) t.join();
}

}  // namespace seyolo
