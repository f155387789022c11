#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

#include "bitblas/csr_matrix.hpp"
#include "bitblas/parallel.hpp"
#include "bitblas/tile_dim.hpp"

namespace bitblas {

/// Bit-Block Compressed Sparse Row matrix.
///
/// An n x n binary matrix cut into dim x dim tiles. Non-empty tiles are indexed
/// CSR-style: tile_row_ptr (nTileRows+1 offsets) and tile_col_ind (one tile
/// column per stored tile, strictly increasing inside a tile-row). bit_tiles
/// holds dim row words per tile, tile after tile; row word r of a tile covers
/// matrix row I*dim+r and bit k of it is column J*dim+k (LSB = lowest column).
///
/// The constructor validates every invariant: no empty tiles, padding bits
/// beyond n clear, B2SR-4 high nibbles clear.
class B2srMatrix {
 public:
  B2srMatrix(std::uint32_t n, TileDim tile_dim, std::vector<std::uint32_t> tile_row_ptr,
             std::vector<std::uint32_t> tile_col_ind, std::vector<std::uint8_t> bit_tiles);

  std::uint32_t n() const noexcept { return n_; }
  TileDim tile_dim() const noexcept { return tile_dim_; }
  std::uint32_t dim() const noexcept { return bitblas::dim(tile_dim_); }
  std::uint32_t n_tile_rows() const noexcept { return static_cast<std::uint32_t>(tile_row_ptr_.size() - 1); }
  std::uint64_t num_tiles() const noexcept { return tile_col_ind_.size(); }

  std::span<const std::uint32_t> tile_row_ptr() const noexcept { return tile_row_ptr_; }
  std::span<const std::uint32_t> tile_col_ind() const noexcept { return tile_col_ind_; }
  std::span<const std::uint8_t> bit_tiles() const noexcept { return bit_tiles_; }

  /// Row word r of stored tile t.
  std::uint32_t row_word(std::uint64_t t, std::uint32_t r) const;
  bool test(std::uint32_t row, std::uint32_t col) const;
  std::uint64_t popcount() const;

  friend bool operator==(const B2srMatrix&, const B2srMatrix&) = default;

 private:
  std::uint32_t n_;
  TileDim tile_dim_;
  std::vector<std::uint32_t> tile_row_ptr_;
  std::vector<std::uint32_t> tile_col_ind_;
  std::vector<std::uint8_t> bit_tiles_;
};

/// Packs a CSR pattern into B2SR; stored values are ignored (every entry is a
/// 1 bit). Throws EmptyMatrixError for n = 0 and ParameterError when the tile
/// count does not fit a 32-bit index.
B2srMatrix csr_to_b2sr(const CsrMatrix& csr, TileDim tile_dim, const Exec& exec = {});

/// Pattern-only CSR holding exactly the set bits of `m`.
CsrMatrix b2sr_to_csr(const B2srMatrix& m);

/// Elementwise transpose: tile indices become the CSC of the tile structure and
/// every tile is bit-transposed, so the result is again row-word ordered.
B2srMatrix b2sr_transpose(const B2srMatrix& m);

/// Copy of `m` with every diagonal bit cleared (tiles emptied by this vanish).
B2srMatrix drop_diagonal(const B2srMatrix& m);

std::uint64_t b2sr_storage_bytes(std::uint32_t n, TileDim tile_dim, std::uint64_t num_tiles);
std::uint64_t storage_bytes(const B2srMatrix& m);
/// Float CSR footprint: rowPtr + colInd + 32-bit values, values counted even
/// for pattern matrices.
std::uint64_t csr_storage_bytes(const CsrMatrix& csr);
std::uint64_t csr_storage_bytes(std::uint32_t n, std::uint64_t nnz);

double compression_ratio(const B2srMatrix& m, const CsrMatrix& csr);
double nonzero_density(const CsrMatrix& csr);

namespace detail {

/// Bit-transposes one d x d tile held as d row words (d <= 32).
void transpose_tile(const std::uint32_t* in, std::uint32_t* out, std::uint32_t d);

template <class Word>
inline Word load_le(const std::uint8_t* p) {
  Word w = 0;
  for (std::size_t b = 0; b < sizeof(Word); ++b) w |= static_cast<Word>(Word{p[b]} << (8 * b));
  return w;
}

template <class Word>
inline void store_le(std::uint8_t* p, Word w) {
  for (std::size_t b = 0; b < sizeof(Word); ++b) p[b] = static_cast<std::uint8_t>(w >> (8 * b));
}

/// Compile-time view of a tile width.
template <std::uint32_t D>
struct Tile {
  static constexpr std::uint32_t kDim = D;
  static constexpr TileDim kTileDim = static_cast<TileDim>(D);
  static constexpr std::uint32_t kWordBytes = row_word_bytes(kTileDim);
  static constexpr std::uint32_t kBytes = D * kWordBytes;

  static std::uint32_t row(const std::uint8_t* tiles, std::uint64_t t, std::uint32_t r) {
    const std::uint8_t* p = tiles + t * kBytes + r * kWordBytes;
    if constexpr (kWordBytes == 1) return *p;
    else if constexpr (kWordBytes == 2) return load_le<std::uint16_t>(p);
    else return load_le<std::uint32_t>(p);
  }
  static void set_row(std::uint8_t* tiles, std::uint64_t t, std::uint32_t r, std::uint32_t w) {
    std::uint8_t* p = tiles + t * kBytes + r * kWordBytes;
    if constexpr (kWordBytes == 1) *p = static_cast<std::uint8_t>(w);
    else if constexpr (kWordBytes == 2) store_le<std::uint16_t>(p, static_cast<std::uint16_t>(w));
    else store_le<std::uint32_t>(p, w);
  }
  /// Bits [j*D, j*D+D) of a little-endian bit stream.
  static std::uint32_t segment(const std::uint8_t* bits, std::uint32_t j) {
    if constexpr (D == 4) return (bits[j >> 1] >> ((j & 1u) * 4)) & 0xFu;
    else if constexpr (D == 8) return bits[j];
    else if constexpr (D == 16) return load_le<std::uint16_t>(bits + 2 * std::size_t{j});
    else return load_le<std::uint32_t>(bits + 4 * std::size_t{j});
  }
};

/// Calls f(Tile<D>{}) for the runtime tile width.
template <class F>
decltype(auto) with_tile(TileDim d, F&& f) {
  switch (d) {
    case TileDim::k4:
      return f(Tile<4>{});
    case TileDim::k8:
      return f(Tile<8>{});
    case TileDim::k16:
      return f(Tile<16>{});
    case TileDim::k32:
      break;
  }
  return f(Tile<32>{});
}

}  // namespace detail
}  // namespace bitblas
