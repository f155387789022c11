#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "bitblas/b2sr_matrix.hpp"

namespace bitblas {

/// On-disk B2SR container, little-endian, no padding:
///   "B2SR" | u32 version | u32 n | u32 tileDim | u32 nTileRows | u64 numTiles |
///   u32 tileRowPtr[nTileRows+1] | u32 tileColInd[numTiles] | u8 bitTiles[numTiles*tileBytes]
inline constexpr std::uint32_t kContainerVersion = 1;

void write_b2sr(const B2srMatrix& m, std::ostream& out);
/// Throws FormatError on a bad magic, unknown version, truncation or any
/// invariant violation of the decoded matrix.
B2srMatrix read_b2sr(std::istream& in);

void save_b2sr(const B2srMatrix& m, const std::filesystem::path& path);
B2srMatrix load_b2sr(const std::filesystem::path& path);

}  // namespace bitblas
