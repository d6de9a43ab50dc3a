#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "chilab/harness/source.hpp"

namespace chilab::harness {

/// CHI_LAB_THREADS when set to a positive integer, else hardware
/// parallelism.
inline unsigned worker_count_from_env() {
  if (const char* env = std::getenv("CHI_LAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

inline constexpr std::size_t kBatchSize = 4096;

/// Pulls the source in batches, maps `work(const SourceItem&) -> Result`
/// over each batch on `threads` workers, then hands results to
/// `emit(const SourceItem&, Result&)` strictly in input order. Returning
/// false from emit stops the run after the current batch.
template <typename Result, typename Work, typename Emit>
void run_ordered(GraphSource& source, unsigned threads, Work&& work, Emit&& emit) {
  threads = std::max(1U, threads);
  std::vector<SourceItem> batch;
  std::vector<Result> results;
  bool more = true;
  while (more) {
    batch.clear();
    more = source.next_batch(batch, kBatchSize);
    if (batch.empty()) continue;
    results.assign(batch.size(), Result{});

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (std::size_t i = next++; i < batch.size(); i = next++) {
        try {
          results[i] = work(batch[i]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    const unsigned spawn = std::min<std::size_t>(threads, batch.size());
    if (spawn <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(spawn);
      for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t i = 0; i < batch.size(); ++i)
      if (!emit(batch[i], results[i])) return;
  }
}

}  // namespace chilab::harness
