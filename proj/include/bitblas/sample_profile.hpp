#pragma once

#include <array>
#include <cstdint>

#include "bitblas/csr_matrix.hpp"
#include "bitblas/parallel.hpp"
#include "bitblas/tile_dim.hpp"

namespace bitblas {

/// Storage estimate for one tile width, extrapolated from sampled tile-rows.
struct TileDimEstimate {
  TileDim tile_dim = TileDim::k4;
  std::uint32_t n_tile_rows = 0;
  std::uint32_t sampled_tile_rows = 0;
  double est_tile_count = 0.0;
  double est_bytes = 0.0;
  double est_compression_ratio = 0.0;
  /// Set bits / (dim^2 * non-empty tiles) over the sampled tile-rows.
  double avg_nnz_occupancy = 0.0;
};

struct SampleProfileReport {
  /// Requested sample size, in units of 4-row tile-rows.
  std::uint32_t sampled_tile_rows = 0;
  std::uint64_t seed = 0;
  std::uint32_t n = 0;
  std::uint64_t nnz = 0;
  std::uint64_t csr_bytes = 0;
  std::array<TileDimEstimate, 4> per_tile_dim{};

  /// Tile width with the smallest estimated footprint; ties go to the smaller tile.
  TileDim recommended() const;
  const TileDimEstimate& at(TileDim d) const;
};

/// Estimates B2SR storage at every tile width from a random subset of
/// tile-rows.
///
/// `sample_count` is measured at the 4-wide tiling (1 <= sample_count <=
/// ceil(n/4)). For a width k the same fraction of the matrix is scanned:
/// ceil(sample_count * nTileRows(k) / nTileRows(4)) tile-rows, chosen uniformly
/// without replacement from a generator seeded by `seed`. The per-tile-row mean
/// of non-empty tiles, times nTileRows(k), is the tile-count estimate, so full
/// coverage reproduces conversion statistics exactly.
SampleProfileReport sample_profile(const CsrMatrix& csr, std::uint32_t sample_count,
                                   std::uint64_t seed, const Exec& exec = {});

/// Number of tile-rows sampled at width `d` for a given request.
std::uint32_t sampled_tile_rows_at(std::uint32_t n, std::uint32_t sample_count, TileDim d);

}  // namespace bitblas
