#include <string>
#include <vector>

#include "bitblas/algorithms.hpp"
#include "bitblas/error.hpp"
#include "bitblas/kernels.hpp"

namespace bitblas {

bool is_symmetric(const B2srMatrix& a) { return b2sr_transpose(a) == a; }

AlgoResult connected_components(const B2srMatrix& a, const Exec& exec) {
  if (!is_symmetric(a)) throw InconsistencyError("connected components needs a symmetric (undirected) matrix");
  const std::uint32_t n = a.n();
  const Semiring min_label = Semiring::min_plus(0.0);

  AlgoResult result;
  DenseVector parent(n);
  for (std::uint32_t i = 0; i < n; ++i) parent[i] = i;

  while (true) {
    if (result.iterations >= n) throw Error("connected components exceeded the safety cap of n iterations");
    const DenseVector before = parent;
    // Smallest label among the neighbours of each vertex.
    const DenseVector neighbour_min = bmv_bin_full_full(a, parent, min_label, {}, exec);
    ++result.iterations;

    // Hooking, in ascending vertex order.
    for (std::uint32_t i = 0; i < n; ++i) {
      const auto root = static_cast<std::uint32_t>(parent[i]);
      if (neighbour_min[i] < parent[root]) parent[root] = neighbour_min[i];
    }
    // Shortcutting to stars.
    for (bool moved = true; moved;) {
      moved = false;
      for (std::uint32_t i = 0; i < n; ++i) {
        const double grand = parent[static_cast<std::uint32_t>(parent[i])];
        if (grand != parent[i]) {
          parent[i] = grand;
          moved = true;
        }
      }
    }
    if (parent == before) break;
  }
  result.per_vertex = std::move(parent);
  result.converged = true;
  return result;
}

}  // namespace bitblas
