#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace gsv {

/// Worker count to use when the caller asks for 0 ("machine parallelism").
inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Splits [0, count) into `chunks` contiguous ranges, runs `work(begin, end)`
/// for each on up to `workers` threads, and returns the per-range results in
/// range order. Callers merge them left to right, so the outcome does not
/// depend on scheduling.
template <typename Result, typename Work>
std::vector<Result> map_ranges(std::uint64_t count, std::uint64_t chunks, int workers,
                               Work work) {
  chunks = std::max<std::uint64_t>(1, std::min(chunks, std::max<std::uint64_t>(count, 1)));
  std::vector<Result> results(chunks);
  const auto bounds = [&](std::uint64_t k) { return count * k / chunks; };
  workers = std::max(1, std::min<int>(workers, static_cast<int>(chunks)));
  if (workers == 1) {
    for (std::uint64_t k = 0; k < chunks; ++k) results[k] = work(bounds(k), bounds(k + 1));
    return results;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::uint64_t k = static_cast<std::uint64_t>(w); k < chunks;
             k += static_cast<std::uint64_t>(workers))
          results[k] = work(bounds(k), bounds(k + 1));
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace gsv
