#include "bitblas/sample_profile.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "bitblas/b2sr_matrix.hpp"
#include "bitblas/error.hpp"

namespace bitblas {

namespace {

// Uniform integer in [0, bound) from the raw 64-bit engine output, by
// rejection, so the draw sequence does not depend on the standard library's
// distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

// `k` distinct indices of [0, population), sorted, by partial Fisher-Yates.
std::vector<std::uint32_t> sample_without_replacement(std::mt19937_64& rng, std::uint32_t population,
                                                      std::uint32_t k) {
  std::vector<std::uint32_t> pool(population);
  std::iota(pool.begin(), pool.end(), 0u);
  for (std::uint32_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::uint32_t>(uniform_below(rng, population - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

std::uint32_t sampled_tile_rows_at(std::uint32_t n, std::uint32_t sample_count, TileDim d) {
  const std::uint64_t base = tile_rows_for(n, TileDim::k4);
  const std::uint64_t ntr = tile_rows_for(n, d);
  if (base == 0) return 0;
  const std::uint64_t k = (std::uint64_t{sample_count} * ntr + base - 1) / base;
  return static_cast<std::uint32_t>(std::clamp<std::uint64_t>(k, 1, ntr));
}

TileDim SampleProfileReport::recommended() const {
  const TileDimEstimate* best = &per_tile_dim[0];
  for (const auto& e : per_tile_dim)
    if (e.est_bytes < best->est_bytes) best = &e;
  return best->tile_dim;
}

const TileDimEstimate& SampleProfileReport::at(TileDim d) const {
  for (const auto& e : per_tile_dim)
    if (e.tile_dim == d) return e;
  throw ParameterError("no estimate for tile dimension " + to_string(d));
}

SampleProfileReport sample_profile(const CsrMatrix& csr, std::uint32_t sample_count,
                                   std::uint64_t seed, const Exec& exec) {
  const std::uint32_t n = csr.n();
  const std::uint32_t available = tile_rows_for(n, TileDim::k4);
  if (sample_count == 0 || sample_count > available)
    throw ParameterError("sample count must be in [1, " + std::to_string(available) + "]");

  SampleProfileReport report;
  report.sampled_tile_rows = sample_count;
  report.seed = seed;
  report.n = n;
  report.nnz = csr.nnz();
  report.csr_bytes = csr_storage_bytes(csr);

  auto row_ptr = csr.row_ptr();
  auto col_ind = csr.col_ind();
  std::mt19937_64 rng(seed);

  for (std::size_t slot = 0; slot < kAllTileDims.size(); ++slot) {
    const TileDim td = kAllTileDims[slot];
    const std::uint32_t k = dim(td);
    const std::uint32_t ntr = tile_rows_for(n, td);
    const std::uint32_t m = sampled_tile_rows_at(n, sample_count, td);
    const auto picked = sample_without_replacement(rng, ntr, m);

    // Per sampled tile-row: distinct tile-column buckets and entry count.
    std::vector<std::uint64_t> tiles(m, 0);
    std::vector<std::uint64_t> entries(m, 0);
    parallel_for(m, exec, 1, [&](std::size_t begin, std::size_t end) {
      std::vector<std::uint32_t> buckets;
      for (std::size_t s = begin; s < end; ++s) {
        const std::uint32_t r0 = picked[s] * k;
        const std::uint32_t r1 = std::min(n, r0 + k);
        buckets.clear();
        for (std::uint32_t p = row_ptr[r0]; p < row_ptr[r1]; ++p) buckets.push_back(col_ind[p] / k);
        std::sort(buckets.begin(), buckets.end());
        tiles[s] = static_cast<std::uint64_t>(std::unique(buckets.begin(), buckets.end()) - buckets.begin());
        entries[s] = row_ptr[r1] - row_ptr[r0];
      }
    });
    const std::uint64_t sampled_tiles = std::accumulate(tiles.begin(), tiles.end(), std::uint64_t{0});
    const std::uint64_t sampled_entries = std::accumulate(entries.begin(), entries.end(), std::uint64_t{0});

    TileDimEstimate& e = report.per_tile_dim[slot];
    e.tile_dim = td;
    e.n_tile_rows = ntr;
    e.sampled_tile_rows = m;
    e.est_tile_count = static_cast<double>(sampled_tiles) * ntr / m;
    e.est_bytes = 4.0 * (ntr + 1.0) + (4.0 + tile_bytes(td)) * e.est_tile_count;
    e.est_compression_ratio = e.est_bytes / static_cast<double>(report.csr_bytes);
    e.avg_nnz_occupancy = sampled_tiles == 0
                              ? 0.0
                              : static_cast<double>(sampled_entries) /
                                    (static_cast<double>(k) * k * static_cast<double>(sampled_tiles));
  }
  return report;
}

}  // namespace bitblas
