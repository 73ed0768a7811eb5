#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hypercount {

/// Resolves the worker count: an explicit request wins, then the
/// HYPERCOUNT_THREADS environment variable, then the hardware concurrency.
inline std::size_t resolve_workers(std::size_t requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HYPERCOUNT_THREADS"); env && *env) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Runs fn(task) for every task in [0, tasks) on up to `workers` threads.
/// Tasks are claimed dynamically; callers write results into per-task slots
/// and merge them in task order so the outcome never depends on scheduling.
/// If tasks throw, the exception of the lowest task index is rethrown.
template <class Fn>
void parallel_for(std::size_t tasks, std::size_t workers, Fn&& fn) {
  workers = std::min(std::max<std::size_t>(workers, 1), tasks);
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) fn(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next.fetch_add(1); t < tasks; t = next.fetch_add(1)) {
          try {
            fn(t);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace hypercount
