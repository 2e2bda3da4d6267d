// parallel.hpp
// Index-ordered fan-out over independent work items. Results land in input
// order regardless of scheduling, so sweeps and probes stay deterministic.
// SLHS_THREADS caps the worker count (default: hardware concurrency).

#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace slhs {

inline int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("SLHS_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

template <typename T>
std::vector<T> parallel_map(int n, const std::function<T(int)>& fn) {
  std::vector<T> out(static_cast<std::size_t>(n));
  const int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) out[static_cast<std::size_t>(i)] = fn(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace slhs
