#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace gkf {

// Global worker cap used by the Monte Carlo loops. 0 = hardware default.
void set_thread_count(unsigned n);
inline unsigned& thread_count_ref() {
  static unsigned n = 0;
  return n;
}
inline void set_thread_count(unsigned n) { thread_count_ref() = n; }
inline unsigned effective_threads() {
  unsigned n = thread_count_ref();
  if (n == 0) n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Deterministic blocked reduction: the index space [0, n) is cut into
// fixed-size blocks; each block is reduced sequentially and block partials
// are combined in block order. The result is bit-identical for any worker
// count because the summation tree never depends on scheduling.
//
// Acc must be default-constructible; combine(acc, acc) folds partials.
template <typename Acc, typename BlockFn, typename CombineFn>
Acc blocked_reduce(std::uint64_t n, BlockFn block_fn, CombineFn combine,
                   std::uint64_t block_size = 1 << 14) {
  if (n == 0) return Acc{};
  std::uint64_t n_blocks = (n + block_size - 1) / block_size;
  std::vector<Acc> partials(n_blocks);
  unsigned workers = effective_threads();
  if (workers <= 1 || n_blocks == 1) {
    for (std::uint64_t b = 0; b < n_blocks; ++b) {
      std::uint64_t lo = b * block_size;
      std::uint64_t hi = std::min(n, lo + block_size);
      partials[b] = block_fn(lo, hi);
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::uint64_t b = next.fetch_add(1);
          if (b >= n_blocks) break;
          std::uint64_t lo = b * block_size;
          std::uint64_t hi = std::min(n, lo + block_size);
          partials[b] = block_fn(lo, hi);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  Acc total = partials[0];
  for (std::uint64_t b = 1; b < partials.size(); ++b)
    total = combine(total, partials[b]);
  return total;
}

}  // namespace gkf
