#ifndef TENCOMPL_PARALLEL_HPP
#define TENCOMPL_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace tencompl {

/// Resolve a thread-count request: 0 means "use available parallelism".
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Work is split into fixed-size chunks that do not depend on the thread
// count; reductions combine per-chunk partials in chunk order. Any thread
// count therefore produces bit-identical results, including threads == 1.
inline constexpr std::int64_t kDefaultChunk = 2048;

/// Run fn(begin, end, chunk_index) over [0, n) in fixed chunks.
/// fn must only write to chunk-local or disjoint state.
template <typename Fn>
void parallel_chunks(std::int64_t n, std::int64_t chunk, int threads, Fn&& fn) {
  if (n <= 0) return;
  const std::int64_t nchunks = (n + chunk - 1) / chunk;
  auto run_chunk = [&](std::int64_t c) {
    const std::int64_t begin = c * chunk;
    const std::int64_t end = begin + chunk < n ? begin + chunk : n;
    fn(begin, end, c);
  };
  if (threads <= 1 || nchunks == 1) {
    for (std::int64_t c = 0; c < nchunks; ++c) run_chunk(c);
    return;
  }
  std::atomic<std::int64_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::int64_t c = next.fetch_add(1);
      if (c >= nchunks) return;
      run_chunk(c);
    }
  };
  const int nworkers = threads < static_cast<int>(nchunks)
                           ? threads
                           : static_cast<int>(nchunks);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nworkers));
  for (int t = 0; t < nworkers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

/// Deterministic reduction: per-chunk partials combined in chunk order.
/// ChunkFn: void(begin, end, Partial&); CombineFn: void(Partial& acc, const Partial&).
template <typename Partial, typename ChunkFn, typename CombineFn>
Partial chunked_reduce(std::int64_t n, std::int64_t chunk, int threads,
                       Partial init, ChunkFn&& per_chunk, CombineFn&& combine) {
  if (n <= 0) return init;
  const std::int64_t nchunks = (n + chunk - 1) / chunk;
  std::vector<Partial> partials(static_cast<std::size_t>(nchunks), init);
  parallel_chunks(n, chunk, threads,
                  [&](std::int64_t begin, std::int64_t end, std::int64_t c) {
                    per_chunk(begin, end, partials[static_cast<std::size_t>(c)]);
                  });
  Partial acc = init;
  for (const Partial& p : partials) combine(acc, p);
  return acc;
}

}  // namespace tencompl

#endif
