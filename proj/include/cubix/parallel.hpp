#pragma once

#include <cstddef>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cubix {

/// requested <= 0 selects the hardware thread count; otherwise pass-through.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

/// Splits [0, n) into exactly `threads` contiguous chunks and runs
/// body(begin, end, chunk) on each. threads == 1 runs the plain serial loop
/// (the reference path, no OpenMP involved); larger counts fan the chunks out
/// over an OpenMP team. Chunk boundaries depend only on n and threads, so a
/// caller that merges per-chunk results in chunk order gets output
/// independent of the actual degree of parallelism.
template <class Body>
void for_chunks(std::size_t n, int threads, Body&& body) {
  if (threads <= 1) {
    body(std::size_t(0), n, 0);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 1) num_threads(threads)
  for (int c = 0; c < threads; ++c) {
    std::size_t begin = n * std::size_t(c) / std::size_t(threads);
    std::size_t end = n * std::size_t(c + 1) / std::size_t(threads);
    body(begin, end, c);
  }
#else
  for (int c = 0; c < threads; ++c) {
    std::size_t begin = n * std::size_t(c) / std::size_t(threads);
    std::size_t end = n * std::size_t(c + 1) / std::size_t(threads);
    body(begin, end, c);
  }
#endif
}

}  // namespace cubix
