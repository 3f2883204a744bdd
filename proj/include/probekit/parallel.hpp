#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace probekit {

// Worker cap: PROBEKIT_THREADS if set, else available hardware parallelism.
inline int worker_count() {
  if (const char* env = std::getenv("PROBEKIT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<int>(std::min<long>(v, 256));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs f(0..n-1) across workers. f(i) must only touch state owned by slot i,
// which keeps results independent of scheduling.
template <typename F>
void parallel_for(int n, F&& f) {
  const int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n) return;
        f(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace probekit
