#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <vector>

#include "bitblas/error.hpp"
#include "bitblas/oracle.hpp"

namespace bitblas::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_source(const CsrMatrix& csr, std::uint32_t src) {
  if (src >= csr.n()) throw ParameterError("source vertex out of range");
}

}  // namespace

DenseVector oracle_bfs(const CsrMatrix& csr, std::uint32_t src) {
  check_source(csr, src);
  DenseVector level(csr.n(), kInf);
  std::deque<std::uint32_t> queue{src};
  level[src] = 0.0;
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop_front();
    for (std::uint32_t v : csr.row(u)) {
      if (level[v] == kInf) {
        level[v] = level[u] + 1.0;
        queue.push_back(v);
      }
    }
  }
  return level;
}

DenseVector oracle_bellman_ford(const CsrMatrix& csr, std::uint32_t src) {
  check_source(csr, src);
  const std::uint32_t n = csr.n();
  DenseVector dist(n, kInf);
  dist[src] = 0.0;
  for (std::uint32_t round = 0; round + 1 < n; ++round) {
    bool changed = false;
    for (std::uint32_t u = 0; u < n; ++u) {
      if (dist[u] == kInf) continue;
      for (std::uint32_t v : csr.row(u)) {
        if (dist[u] + 1.0 < dist[v]) {
          dist[v] = dist[u] + 1.0;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return dist;
}

DenseVector oracle_pagerank(const CsrMatrix& csr, double alpha, std::uint32_t iters) {
  const std::uint32_t n = csr.n();
  if (n == 0) return {};
  // Dense column-stochastic matrix: P[i][j] = 1/outdeg(j) for each edge j -> i.
  const DenseMatrix in = DenseMatrix::from_csr(csr).transposed();
  std::vector<double> outdeg(n, 0.0);
  for (std::uint32_t j = 0; j < n; ++j) outdeg[j] = static_cast<double>(csr.row(j).size());
  DenseVector rank(n, 1.0 / n);
  for (std::uint32_t it = 0; it < iters; ++it) {
    DenseVector next(n, 0.0);
    for (std::uint32_t i = 0; i < n; ++i) {
      double gathered = 0.0;
      for (std::uint32_t j = 0; j < n; ++j)
        if (in.at(i, j) != 0.0) gathered = gathered + rank[j] / outdeg[j];
      next[i] = (1.0 - alpha) / n + alpha * gathered;
    }
    rank = std::move(next);
  }
  return rank;
}

DenseVector oracle_cc_union_find(const CsrMatrix& csr) {
  const std::uint32_t n = csr.n();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v : csr.row(u)) {
      const std::uint32_t ru = find(u);
      const std::uint32_t rv = find(v);
      // Smaller id becomes the root, so roots are component minima.
      if (ru < rv) parent[rv] = ru;
      else if (rv < ru) parent[ru] = rv;
    }
  }
  DenseVector labels(n);
  for (std::uint32_t v = 0; v < n; ++v) labels[v] = find(v);
  return labels;
}

std::uint64_t oracle_triangle_count(const CsrMatrix& csr) {
  const std::uint32_t n = csr.n();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v : csr.row(u))
      if (u != v) adj[u][v] = adj[v][u] = 1;
  std::uint64_t count = 0;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (!adj[a][b]) continue;
      for (std::uint32_t c = b + 1; c < n; ++c)
        if (adj[a][c] && adj[b][c]) ++count;
    }
  return count;
}

}  // namespace bitblas::oracle
