#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace solvegeo {

// Worker count: SOLVEGEO_THREADS caps (or sets) the hardware concurrency.
inline int thread_budget() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const char* env = std::getenv("SOLVEGEO_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

// Static index-chunked parallel loop; results written by index stay
// deterministic regardless of scheduling.
template <class F>
void parallel_for(long n, F&& body, int n_threads = 0) {
  if (n_threads <= 0) n_threads = thread_budget();
  if (n_threads == 1 || n < 2 * n_threads) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  const long chunk = (n + n_threads - 1) / n_threads;
  for (int w = 0; w < n_threads; ++w) {
    const long lo = w * chunk;
    const long hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (long i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace solvegeo
