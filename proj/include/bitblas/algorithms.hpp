#pragma once

#include <cstdint>

#include "bitblas/b2sr_matrix.hpp"
#include "bitblas/csr_matrix.hpp"
#include "bitblas/parallel.hpp"
#include "bitblas/vectors.hpp"

namespace bitblas {

struct AlgoParams {
  double alpha = 0.85;
  double epsilon = 1e-9;
  std::uint32_t max_iter = 10;

  /// Throws ParameterError unless 0 < alpha < 1, epsilon > 0, max_iter >= 1.
  void validate() const;
};

struct AlgoResult {
  /// Levels, distances, ranks or labels; empty for triangle counting.
  DenseVector per_vertex;
  /// Triangle count; 0 for the per-vertex algorithms.
  std::uint64_t count = 0;
  std::uint32_t iterations = 0;
  bool converged = false;
};

/// Which edges a traversal follows when the matrix holds out-edges (row i has
/// a bit at j for i -> j). InEdges walks the same matrix backwards.
enum class Traversal { OutEdges, InEdges };

/// Level-synchronous BFS on the Boolean semiring. Unreachable vertices get +inf.
AlgoResult bfs(const B2srMatrix& a, std::uint32_t src, Traversal dir = Traversal::OutEdges,
               const Exec& exec = {});

/// Unit-weight shortest paths by min-plus relaxation to a fixpoint. Self-loops
/// are dropped before iterating.
AlgoResult sssp(const B2srMatrix& a, std::uint32_t src, Traversal dir = Traversal::OutEdges,
                const Exec& exec = {});

/// Power iteration on the column-stochastic matrix. `in_edges` must be the
/// transpose of the out-edge adjacency (row i gathers from in-neighbours) and
/// `out_degree[j]` the out-degree of j. Stops when the L1 change drops below
/// epsilon or after max_iter rounds.
AlgoResult pagerank(const B2srMatrix& in_edges, const DenseVector& out_degree,
                    const AlgoParams& params = {}, const Exec& exec = {});

/// Convenience wrapper: transposes the out-edge adjacency once and derives the
/// out-degree vector from its rows.
AlgoResult pagerank_from_adjacency(const B2srMatrix& out_edges, const AlgoParams& params = {},
                                   const Exec& exec = {});

/// Row popcounts.
DenseVector out_degrees(const B2srMatrix& a);

/// FastSV-style min-label propagation with hooking and shortcutting; labels
/// end as the minimum vertex id of each component. Requires a symmetric matrix.
AlgoResult connected_components(const B2srMatrix& a, const Exec& exec = {});

/// count = sum over L of (L * L^T), L the strict lower triangle. The input
/// must be symmetric without self-loops.
AlgoResult triangle_count(const CsrMatrix& a, TileDim tile_dim, const Exec& exec = {});
AlgoResult triangle_count(const B2srMatrix& a, const Exec& exec = {});

bool is_symmetric(const B2srMatrix& a);

}  // namespace bitblas
