#include "bitblas/b2sr_matrix.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "bitblas/error.hpp"

namespace bitblas {

B2srMatrix::B2srMatrix(std::uint32_t n, TileDim tile_dim, std::vector<std::uint32_t> tile_row_ptr,
                       std::vector<std::uint32_t> tile_col_ind, std::vector<std::uint8_t> bit_tiles)
    : n_(n),
      tile_dim_(tile_dim),
      tile_row_ptr_(std::move(tile_row_ptr)),
      tile_col_ind_(std::move(tile_col_ind)),
      bit_tiles_(std::move(bit_tiles)) {
  const std::uint32_t d = bitblas::dim(tile_dim_);
  if (d != 4 && d != 8 && d != 16 && d != 32) throw FormatError("invalid tile dimension");
  if (n_ == 0) throw EmptyMatrixError("B2SR matrix must have at least one vertex");
  const std::uint32_t ntr = tile_rows_for(n_, tile_dim_);
  if (tile_row_ptr_.size() != std::size_t{ntr} + 1)
    throw FormatError("tileRowPtr must have nTileRows+1 entries");
  if (tile_row_ptr_.front() != 0) throw FormatError("tileRowPtr[0] must be 0");
  if (tile_row_ptr_.back() != tile_col_ind_.size()) throw FormatError("tileRowPtr[nTileRows] must equal numTiles");
  if (bit_tiles_.size() != tile_col_ind_.size() * std::size_t{tile_bytes(tile_dim_)})
    throw FormatError("bitTiles must hold numTiles * tileBytes bytes");

  const std::uint32_t pad_rows = ntr * d - n_;  // rows/cols of the last tile beyond n
  const std::uint32_t last_valid_mask =
      pad_rows == 0 ? row_mask(tile_dim_) : ((1u << (d - pad_rows)) - 1u);
  detail::with_tile(tile_dim_, [&](auto tile) {
    using T = decltype(tile);
    for (std::uint32_t I = 0; I < ntr; ++I) {
      const std::uint32_t b = tile_row_ptr_[I];
      const std::uint32_t e = tile_row_ptr_[I + 1];
      if (e < b) throw FormatError("tileRowPtr is decreasing at tile-row " + std::to_string(I));
      for (std::uint32_t t = b; t < e; ++t) {
        const std::uint32_t J = tile_col_ind_[t];
        if (J >= ntr) throw FormatError("tile column index out of range");
        if (t > b && J <= tile_col_ind_[t - 1])
          throw FormatError("tile column indices not strictly increasing in tile-row " + std::to_string(I));
        const std::uint32_t col_mask = J + 1 == ntr ? last_valid_mask : row_mask(tile_dim_);
        const std::uint32_t valid_rows = I + 1 == ntr ? d - pad_rows : d;
        std::uint32_t any = 0;
        for (std::uint32_t r = 0; r < d; ++r) {
          const std::uint32_t w = T::row(bit_tiles_.data(), t, r);
          if constexpr (T::kDim == 4) {
            if (w & 0xF0u) throw FormatError("B2SR-4 row byte has a non-zero high nibble");
          }
          if (r >= valid_rows && w != 0) throw FormatError("padding row holds set bits");
          if (w & ~col_mask) throw FormatError("padding column holds set bits");
          any |= w;
        }
        if (any == 0) throw FormatError("stored tile is empty");
      }
    }
  });
}

std::uint32_t B2srMatrix::row_word(std::uint64_t t, std::uint32_t r) const {
  return detail::with_tile(tile_dim_, [&](auto tile) { return decltype(tile)::row(bit_tiles_.data(), t, r); });
}

bool B2srMatrix::test(std::uint32_t row, std::uint32_t col) const {
  if (row >= n_ || col >= n_) return false;
  const std::uint32_t d = dim();
  const std::uint32_t I = row / d;
  const std::uint32_t J = col / d;
  auto first = tile_col_ind_.begin() + tile_row_ptr_[I];
  auto last = tile_col_ind_.begin() + tile_row_ptr_[I + 1];
  auto it = std::lower_bound(first, last, J);
  if (it == last || *it != J) return false;
  const auto t = static_cast<std::uint64_t>(it - tile_col_ind_.begin());
  return (row_word(t, row % d) >> (col % d)) & 1u;
}

std::uint64_t B2srMatrix::popcount() const {
  std::uint64_t total = 0;
  for (std::uint8_t b : bit_tiles_) total += static_cast<std::uint64_t>(std::popcount(b));
  return total;
}

}  // namespace bitblas
