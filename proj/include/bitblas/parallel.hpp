#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace bitblas {

/// Worker configuration handed to every kernel and conversion.
///
/// Work is always split into contiguous ranges of tile-rows and each range is
/// owned by one worker, so outputs are byte-identical for any worker count.
struct Exec {
  unsigned workers = 1;

  /// Reads BITBLAS_THREADS; falls back to `fallback` when unset or invalid.
  static Exec from_env(unsigned fallback = 1);
};

/// Runs body(begin, end) over [0, count) split into at most `exec.workers`
/// contiguous chunks. Chunk boundaries are multiples of `align`. If several
/// chunks throw, the exception of the lowest chunk is rethrown.
template <class Body>
void parallel_for(std::size_t count, const Exec& exec, std::size_t align, Body&& body) {
  if (count == 0) return;
  align = std::max<std::size_t>(align, 1);
  const std::size_t units = (count + align - 1) / align;
  const std::size_t chunks = std::min<std::size_t>(std::max(exec.workers, 1u), units);
  if (chunks <= 1) {
    body(std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> pool;
    pool.reserve(chunks - 1);
    auto run = [&](std::size_t c) {
      const std::size_t begin = std::min(count, (units * c / chunks) * align);
      const std::size_t end = std::min(count, (units * (c + 1) / chunks) * align);
      try {
        if (begin < end) body(begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    };
    for (std::size_t c = 1; c < chunks; ++c) pool.emplace_back(run, c);
    run(0);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace bitblas
