#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace gdd {

// Static contiguous split of [begin, end) across worker threads.  Workers
// write to index-addressed slots only, so results are deterministic.
// fn(chunk_begin, chunk_end, chunk_index) is called once per chunk.
template <class Fn>
void parallel_chunks(size_t begin, size_t end, unsigned thread_count, Fn&& fn) {
  const size_t total = end - begin;
  unsigned workers = thread_count ? thread_count : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(std::min<size_t>(workers, total ? total : 1));
  if (workers <= 1 || total < 2) {
    fn(begin, end, 0u);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const size_t chunk = (total + workers - 1) / workers;
  for (unsigned t = 0; t < workers; ++t) {
    const size_t lo = begin + static_cast<size_t>(t) * chunk;
    const size_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, t, &fn] { fn(lo, hi, t); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace gdd
