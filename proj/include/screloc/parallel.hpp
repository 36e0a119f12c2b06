#ifndef SCRELOC_PARALLEL_HPP
#define SCRELOC_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace screloc {

/// Global worker-thread cap (0 = hardware concurrency). Settable from the CLI.
inline std::atomic<int>& max_threads_setting() {
  static std::atomic<int> value{0};
  return value;
}

inline void set_max_threads(int n) { max_threads_setting().store(n); }

inline int effective_threads(std::size_t items) {
  int n = max_threads_setting().load();
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (static_cast<std::size_t>(n) > items) n = static_cast<int>(items);
  return n < 1 ? 1 : n;
}

/// Runs fn(i) for i in [0, count). fn(i) must depend only on i (plus read-only
/// shared state) and write only to slot i of its outputs, so results are
/// identical for any thread count.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  if (count == 0) return;
  const int threads = effective_threads(count);
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace screloc

#endif
