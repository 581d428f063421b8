#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace adhmlab {

// Thread count resolution: explicit request > ADHMLAB_THREADS > hardware.
inline unsigned resolve_threads(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  if (const char* env = std::getenv("ADHMLAB_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Index-parallel loop with deterministic result placement: fn(k) must write
// only to slot k of whatever it fills. Exceptions propagate.
template <class Fn>
void parallel_for_each(size_t count, int requested_threads, Fn&& fn) {
  unsigned threads = resolve_threads(requested_threads);
  if (threads <= 1 || count <= 1) {
    for (size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      size_t k = next.fetch_add(1);
      if (k >= count || failed.load()) return;
      try {
        fn(k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned spawn = std::min<size_t>(threads, count);
  pool.reserve(spawn);
  for (unsigned k = 0; k < spawn; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace adhmlab
