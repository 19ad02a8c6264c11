#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <future>
#include <vector>

namespace prymlab {

/// Worker cap: PRYM_LAB_THREADS if set to a positive integer, else hardware concurrency.
int worker_count();

/// Runs f(i) for i in [0, n) on up to worker_count() tasks and returns the
/// results in index order.
template <class R>
std::vector<R> parallel_map(std::size_t n, const std::function<R(std::size_t)>& f) {
  std::vector<R> out(n);
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(worker_count()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < n; i += workers) out[i] = f(i);
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

}  // namespace prymlab
