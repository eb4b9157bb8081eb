#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace maxsym::detail {

// Runs tasks 0..n-1 across `workers` threads, collecting results in task
// order.  When `hit` is supplied, tasks above the lowest hit index may be
// skipped; tasks below it always run, so scanning the results for the first
// hit is thread-count independent.
template <typename Result>
std::vector<Result> run_tasks_ordered(int workers, int num_tasks,
                                      const std::function<Result(int)>& fn,
                                      const std::function<bool(const Result&)>& hit = nullptr) {
  std::vector<Result> results(static_cast<std::size_t>(std::max(0, num_tasks)));
  if (num_tasks <= 0) return results;
  workers = std::max(1, std::min(workers, num_tasks));
  std::atomic<int> next{0};
  std::atomic<int> first_hit{num_tasks};
  auto body = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= num_tasks) break;
      if (hit && i > first_hit.load()) continue;
      results[i] = fn(i);
      if (hit && hit(results[i])) {
        int cur = first_hit.load();
        while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  if (workers == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  return results;
}

}  // namespace maxsym::detail
