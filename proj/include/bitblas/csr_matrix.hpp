#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bitblas {

/// Square compressed-sparse-row matrix with an optional 32-bit float value
/// array. Pattern-only matrices carry no values.
///
/// Invariants (checked by the constructor, FormatError on violation):
/// rowPtr has n+1 entries starting at 0 and is non-decreasing, column indices
/// are strictly increasing within a row and < n, and stored values are never
/// exactly zero.
class CsrMatrix {
 public:
  CsrMatrix() : row_ptr_(1, 0) {}
  CsrMatrix(std::uint32_t n, std::vector<std::uint32_t> row_ptr, std::vector<std::uint32_t> col_ind,
            std::optional<std::vector<float>> values = std::nullopt);

  /// Builds a pattern matrix from unordered (row, col) pairs; duplicates merge.
  static CsrMatrix from_entries(std::uint32_t n,
                                std::vector<std::pair<std::uint32_t, std::uint32_t>> entries);

  std::uint32_t n() const noexcept { return n_; }
  std::uint64_t nnz() const noexcept { return col_ind_.size(); }
  std::span<const std::uint32_t> row_ptr() const noexcept { return row_ptr_; }
  std::span<const std::uint32_t> col_ind() const noexcept { return col_ind_; }
  const std::optional<std::vector<float>>& values() const noexcept { return values_; }
  bool has_values() const noexcept { return values_.has_value(); }

  std::span<const std::uint32_t> row(std::uint32_t i) const {
    return std::span<const std::uint32_t>(col_ind_).subspan(row_ptr_[i], row_ptr_[i + 1] - row_ptr_[i]);
  }
  bool contains(std::uint32_t r, std::uint32_t c) const;

  /// Same matrix without the value array.
  CsrMatrix pattern() const;
  /// Pattern of the transpose; values are carried along when present.
  CsrMatrix transposed() const;
  bool same_pattern(const CsrMatrix& other) const;
  bool is_symmetric() const;
  bool has_self_loops() const;

  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries() const;

  friend bool operator==(const CsrMatrix&, const CsrMatrix&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> row_ptr_;
  std::vector<std::uint32_t> col_ind_;
  std::optional<std::vector<float>> values_;
};

}  // namespace bitblas
