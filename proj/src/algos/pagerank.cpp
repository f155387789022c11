#include <bit>
#include <cmath>
#include <string>

#include "bitblas/algorithms.hpp"
#include "bitblas/error.hpp"
#include "bitblas/kernels.hpp"

namespace bitblas {

void AlgoParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0, 1)");
  if (!(epsilon > 0.0)) throw ParameterError("epsilon must be positive");
  if (max_iter < 1) throw ParameterError("max_iter must be at least 1");
}

DenseVector out_degrees(const B2srMatrix& a) {
  const std::uint32_t n = a.n();
  const std::uint32_t d = a.dim();
  DenseVector deg(n, 0.0);
  auto trp = a.tile_row_ptr();
  for (std::uint32_t I = 0; I < a.n_tile_rows(); ++I)
    for (std::uint32_t t = trp[I]; t < trp[I + 1]; ++t)
      for (std::uint32_t r = 0; r < d && I * d + r < n; ++r) deg[I * d + r] += std::popcount(a.row_word(t, r));
  return deg;
}

AlgoResult pagerank(const B2srMatrix& in_edges, const DenseVector& out_degree, const AlgoParams& params,
                    const Exec& exec) {
  params.validate();
  const std::uint32_t n = in_edges.n();
  if (out_degree.size() != n) throw ParameterError("out-degree vector length does not match matrix dimension");

  // Column j of the gather matrix holds j's out-edges.
  const DenseVector edges_out = out_degrees(b2sr_transpose(in_edges));
  for (std::uint32_t j = 0; j < n; ++j)
    if (edges_out[j] > 0.0 && out_degree[j] == 0.0)
      throw InconsistencyError("vertex " + std::to_string(j) + " has out-edges but out-degree 0");

  const Semiring arith = Semiring::arithmetic();
  const double teleport = (1.0 - params.alpha) / n;
  AlgoResult result;
  DenseVector rank(n, 1.0 / n);
  while (result.iterations < params.max_iter) {
    const DenseVector gathered = bmv_bin_full_full(in_edges, rank, arith, out_degree.values, exec);
    DenseVector next(n);
    double change = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) {
      next[i] = teleport + params.alpha * gathered[i];
      change += std::abs(next[i] - rank[i]);
    }
    rank = std::move(next);
    ++result.iterations;
    if (change < params.epsilon) {
      result.converged = true;
      break;
    }
  }
  result.per_vertex = std::move(rank);
  return result;
}

AlgoResult pagerank_from_adjacency(const B2srMatrix& out_edges, const AlgoParams& params, const Exec& exec) {
  return pagerank(b2sr_transpose(out_edges), out_degrees(out_edges), params, exec);
}

}  // namespace bitblas
