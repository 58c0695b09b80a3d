#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <string_view>
#include <thread>
#include <vector>

namespace srg12 {

/// Execution settings for the counting kernels. Results never depend on
/// `workers`; every kernel reduces exact integer partial counts.
struct Exec {
  unsigned workers = 1;
  /// Called from a single thread with (stage, fraction done), at most about
  /// once per second.
  std::function<void(std::string_view, double)> progress;
};

/// SRG12_WORKERS if set and positive, otherwise hardware concurrency.
unsigned default_worker_count();

/// Runs body(i, acc) for i in [0, count) across exec.workers threads, each with
/// its own accumulator copied from `init` (which must be the identity of +=),
/// then folds them with `acc += part`.
template <class Acc, class Body>
Acc parallel_reduce(std::size_t count, const Exec& exec, std::string_view stage, const Acc& init,
                    Body body) {
  const unsigned workers =
      static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(exec.workers, count)));
  std::atomic<std::size_t> next{0};
  std::vector<Acc> parts(workers, init);
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto run = [&](unsigned w) {
    auto last_report = std::chrono::steady_clock::now();
    try {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        body(i, parts[w]);
        if (w == 0 && exec.progress) {
          const auto now = std::chrono::steady_clock::now();
          if (now - last_report >= std::chrono::seconds(1)) {
            exec.progress(stage, static_cast<double>(i + 1) / static_cast<double>(count));
            last_report = now;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count);
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) threads.emplace_back(run, w);
    run(0);
  }
  if (failure) std::rethrow_exception(failure);

  Acc total = init;
  for (auto& p : parts) total += p;
  return total;
}

}  // namespace srg12
