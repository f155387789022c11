#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace bitblas {

/// Square bit-tile width of a B2SR matrix.
enum class TileDim : std::uint32_t { k4 = 4, k8 = 8, k16 = 16, k32 = 32 };

inline constexpr std::array<TileDim, 4> kAllTileDims = {TileDim::k4, TileDim::k8, TileDim::k16,
                                                        TileDim::k32};

constexpr std::uint32_t dim(TileDim d) { return static_cast<std::uint32_t>(d); }

/// Bytes per stored bit-row: one byte holds a 4-bit row (low nibble) or an
/// 8-bit row, then 16- and 32-bit words.
constexpr std::uint32_t row_word_bytes(TileDim d) {
  switch (d) {
    case TileDim::k4:
    case TileDim::k8:
      return 1;
    case TileDim::k16:
      return 2;
    case TileDim::k32:
      return 4;
  }
  return 0;
}

constexpr std::uint32_t tile_bytes(TileDim d) { return dim(d) * row_word_bytes(d); }

constexpr std::uint32_t tile_rows_for(std::uint32_t n, TileDim d) {
  return static_cast<std::uint32_t>((std::uint64_t{n} + dim(d) - 1) / dim(d));
}

/// Mask of the valid bits in one row word.
constexpr std::uint32_t row_mask(TileDim d) {
  return d == TileDim::k32 ? 0xFFFFFFFFu : ((1u << dim(d)) - 1u);
}

/// Throws ParameterError unless `value` is one of 4, 8, 16, 32.
TileDim tile_dim_from_int(long long value);

std::string to_string(TileDim d);

}  // namespace bitblas
