#include "bitblas/b2sr_matrix.hpp"

namespace bitblas {

std::uint64_t b2sr_storage_bytes(std::uint32_t n, TileDim tile_dim, std::uint64_t num_tiles) {
  const std::uint64_t ntr = tile_rows_for(n, tile_dim);
  return 4 * (ntr + 1) + 4 * num_tiles + num_tiles * tile_bytes(tile_dim);
}

std::uint64_t storage_bytes(const B2srMatrix& m) {
  return b2sr_storage_bytes(m.n(), m.tile_dim(), m.num_tiles());
}

std::uint64_t csr_storage_bytes(std::uint32_t n, std::uint64_t nnz) {
  return 4 * (std::uint64_t{n} + 1) + 4 * nnz + 4 * nnz;
}

std::uint64_t csr_storage_bytes(const CsrMatrix& csr) { return csr_storage_bytes(csr.n(), csr.nnz()); }

double compression_ratio(const B2srMatrix& m, const CsrMatrix& csr) {
  return static_cast<double>(storage_bytes(m)) / static_cast<double>(csr_storage_bytes(csr));
}

double nonzero_density(const CsrMatrix& csr) {
  if (csr.n() == 0) return 0.0;
  const double n = csr.n();
  return static_cast<double>(csr.nnz()) / (n * n);
}

}  // namespace bitblas
