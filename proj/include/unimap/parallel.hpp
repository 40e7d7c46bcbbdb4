#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace unimap {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Evaluates fn(0..shards-1), possibly concurrently, and returns the results
// indexed by shard. Reductions over the returned vector are performed by the
// caller in shard order, so results never depend on the thread count.
template <class R, class F>
std::vector<R> run_sharded(int shards, int threads, F&& fn) {
  std::vector<R> out(shards);
  if (shards == 0) return out;
  threads = std::min(resolve_threads(threads), shards);
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      int s = next.fetch_add(1);
      if (s >= shards) return;
      try {
        out[s] = fn(s);
      } catch (...) {
        std::scoped_lock lk(error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace unimap
