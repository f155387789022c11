#include "bitblas/algorithms.hpp"
#include "bitblas/error.hpp"
#include "bitblas/kernels.hpp"
#include "bitblas/matrix_market.hpp"

namespace bitblas {

AlgoResult triangle_count(const CsrMatrix& a, TileDim tile_dim, const Exec& exec) {
  if (!a.is_symmetric()) throw InconsistencyError("triangle counting needs a symmetric (undirected) matrix");
  if (a.has_self_loops()) throw InconsistencyError("triangle counting input still has self-loops");
  const B2srMatrix lower = csr_to_b2sr(lower_triangle(a), tile_dim, exec);
  AlgoResult result;
  result.count = bmm_bin_bin_sum_masked(lower, b2sr_transpose(lower), lower, exec);
  result.iterations = 1;
  result.converged = true;
  return result;
}

AlgoResult triangle_count(const B2srMatrix& a, const Exec& exec) {
  return triangle_count(b2sr_to_csr(a), a.tile_dim(), exec);
}

}  // namespace bitblas
