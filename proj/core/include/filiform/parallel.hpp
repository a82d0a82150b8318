#pragma once

#include <cstddef>
#include <thread>
#include <utility>
#include <vector>

namespace filiform {

/// Worker cap. FILIFORM_THREADS in the environment limits it; 0 or unset means
/// one worker per hardware thread.
int thread_budget();

/// Splits [0, total) into contiguous chunks, runs fn(begin, end) -> Acc on each
/// (possibly concurrently), and returns the per-chunk results in chunk order, so
/// concatenating them is deterministic regardless of the worker count.
template <class Acc, class Fn>
std::vector<Acc> run_chunked(std::size_t total, Fn&& fn) {
  std::vector<Acc> results;
  if (total == 0) return results;
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(thread_budget()), total);
  if (workers <= 1) {
    results.push_back(fn(0, total));
    return results;
  }
  results.resize(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (total + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(total, begin + chunk);
    pool.emplace_back([&results, &fn, w, begin, end] { results[w] = fn(begin, end); });
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace filiform
