#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "bitblas/csr_matrix.hpp"

namespace bitblas {

enum class Symmetrize { None, Union };

struct IngestOptions {
  /// Every stored entry becomes a 1, whatever its value.
  bool binarize = true;
  Symmetrize symmetrize = Symmetrize::None;
  bool drop_self_loops = false;
  /// Entries stored as 0.0 are removed before binarization.
  bool drop_explicit_zeros = false;
};

struct IngestResult {
  CsrMatrix matrix;
  /// Coordinate lines in the file, before symmetric expansion.
  std::uint64_t file_entries = 0;
  std::string field;
  std::string symmetry;
};

/// Parses Matrix Market coordinate data (field pattern/real/integer, symmetry
/// general/symmetric). Indices are converted to 0-based, duplicates merge,
/// options are applied, and non-square matrices are rejected.
IngestResult ingest_matrix_market(std::istream& in, const IngestOptions& opts = {});
IngestResult ingest_matrix_market_file(const std::filesystem::path& path, const IngestOptions& opts = {});
CsrMatrix read_matrix_market(const std::filesystem::path& path, const IngestOptions& opts = {});

/// Writes a "coordinate pattern general" file (or "real" when values exist).
void write_matrix_market(const CsrMatrix& csr, std::ostream& out);
void write_matrix_market_file(const CsrMatrix& csr, const std::filesystem::path& path);

/// Entries with row > column.
CsrMatrix lower_triangle(const CsrMatrix& csr);

/// Pattern of A | A^T. Values are dropped.
CsrMatrix symmetrize_union(const CsrMatrix& csr);

}  // namespace bitblas
