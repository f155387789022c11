#include <algorithm>
#include <limits>
#include <string>

#include "bitblas/algorithms.hpp"
#include "bitblas/error.hpp"
#include "bitblas/kernels.hpp"

namespace bitblas {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_source(const B2srMatrix& a, std::uint32_t src) {
  if (src >= a.n())
    throw ParameterError("source vertex " + std::to_string(src) + " out of range for n = " + std::to_string(a.n()));
}

// The kernels gather along row i (i <- j whenever A[i,j] = 1), so following
// out-edges needs the transpose.
B2srMatrix gather_matrix(const B2srMatrix& a, Traversal dir) {
  return dir == Traversal::OutEdges ? b2sr_transpose(a) : a;
}

}  // namespace

AlgoResult bfs(const B2srMatrix& a, std::uint32_t src, Traversal dir, const Exec& exec) {
  check_source(a, src);
  const std::uint32_t n = a.n();
  const B2srMatrix g = gather_matrix(a, dir);

  AlgoResult result;
  result.per_vertex = DenseVector(n, kInf);
  result.per_vertex[src] = 0.0;
  BitVector frontier(n);
  frontier.set(src);
  BitVector visited = frontier;

  while (true) {
    if (result.iterations >= n) throw Error("bfs exceeded the safety cap of n iterations");
    BitVector next = bmv_bin_bin_bin_masked(g, frontier, ~visited, exec);
    ++result.iterations;
    if (next.none()) break;
    const double level = result.iterations;
    for (std::uint32_t v : next.indices()) result.per_vertex[v] = level;
    visited |= next;
    frontier = std::move(next);
  }
  result.converged = true;
  return result;
}

AlgoResult sssp(const B2srMatrix& a, std::uint32_t src, Traversal dir, const Exec& exec) {
  check_source(a, src);
  const std::uint32_t n = a.n();
  const B2srMatrix g = drop_diagonal(gather_matrix(a, dir));
  const Semiring hop = Semiring::min_plus(1.0);

  AlgoResult result;
  DenseVector dist(n, kInf);
  dist[src] = 0.0;
  while (true) {
    if (result.iterations >= n) throw Error("sssp exceeded the safety cap of n iterations");
    const DenseVector candidate = bmv_bin_full_full(g, dist, hop, {}, exec);
    ++result.iterations;
    bool changed = false;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (candidate[i] < dist[i]) {
        dist[i] = candidate[i];
        changed = true;
      }
    }
    if (!changed) break;
  }
  result.per_vertex = std::move(dist);
  result.converged = true;
  return result;
}

}  // namespace bitblas
