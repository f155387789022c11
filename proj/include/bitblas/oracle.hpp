#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bitblas/csr_matrix.hpp"
#include "bitblas/semiring.hpp"
#include "bitblas/vectors.hpp"

// Brute-force references. Deliberately naive; they never touch B2SR.
namespace bitblas::oracle {

/// Row-major n x n matrix of doubles (0/1 for patterns).
struct DenseMatrix {
  std::uint32_t n = 0;
  std::vector<double> entries;

  DenseMatrix() = default;
  explicit DenseMatrix(std::uint32_t size) : n(size), entries(std::size_t{size} * size, 0.0) {}
  /// Pattern of `csr` as 0/1 entries.
  static DenseMatrix from_csr(const CsrMatrix& csr);

  double& at(std::uint32_t i, std::uint32_t j) { return entries[std::size_t{i} * n + j]; }
  double at(std::uint32_t i, std::uint32_t j) const { return entries[std::size_t{i} * n + j]; }
  DenseMatrix transposed() const;
};

/// Textbook semiring mxv with ascending-j reduction. For Arithmetic an optional
/// scale divides x[j] before accumulation. Boolean yields 0/1 values.
DenseVector dense_semiring_mxv(const DenseMatrix& a, const DenseVector& x, const Semiring& s,
                               std::span<const double> scale = {});

/// Triple-loop integer product, summed over the mask's nonzeros (all entries
/// when `mask` is null).
std::uint64_t dense_mxm_masked_sum(const DenseMatrix& a, const DenseMatrix& b,
                                   const DenseMatrix* mask = nullptr);

/// 32-bit float CSR SpMV; missing values count as 1.0.
DenseVector csr_spmv_f32(const CsrMatrix& csr, const DenseVector& x);
/// Row-wise (Gustavson) SpGEMM with 32-bit float accumulators, then the sum of
/// the product's entries.
std::uint64_t csr_spgemm_sum_f32(const CsrMatrix& a, const CsrMatrix& b);

/// Hop levels from `src` along out-edges; +inf for unreachable vertices.
DenseVector oracle_bfs(const CsrMatrix& csr, std::uint32_t src);
/// Unit-weight Bellman-Ford along out-edges; +inf for unreachable vertices.
DenseVector oracle_bellman_ford(const CsrMatrix& csr, std::uint32_t src);
/// `iters` rounds of rank' = (1-alpha)/n + alpha * sum_{j->i} rank[j]/outdeg[j]
/// from the uniform vector; dangling vertices leak their mass.
DenseVector oracle_pagerank(const CsrMatrix& csr, double alpha, std::uint32_t iters);
/// Union-find over the undirected pattern; each label is the component's
/// minimum vertex id.
DenseVector oracle_cc_union_find(const CsrMatrix& csr);
/// Unordered triples {a, b, c} with all three edges present (pattern treated
/// as undirected, self-loops ignored).
std::uint64_t oracle_triangle_count(const CsrMatrix& csr);

}  // namespace bitblas::oracle
