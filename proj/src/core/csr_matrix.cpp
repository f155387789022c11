#include "bitblas/csr_matrix.hpp"

#include <algorithm>
#include <string>

#include "bitblas/error.hpp"

namespace bitblas {

CsrMatrix::CsrMatrix(std::uint32_t n, std::vector<std::uint32_t> row_ptr,
                     std::vector<std::uint32_t> col_ind, std::optional<std::vector<float>> values)
    : n_(n), row_ptr_(std::move(row_ptr)), col_ind_(std::move(col_ind)), values_(std::move(values)) {
  if (row_ptr_.size() != std::size_t{n_} + 1)
    throw FormatError("CSR rowPtr must have n+1 entries");
  if (row_ptr_.front() != 0) throw FormatError("CSR rowPtr[0] must be 0");
  if (row_ptr_.back() != col_ind_.size()) throw FormatError("CSR rowPtr[n] must equal nnz");
  for (std::uint32_t i = 0; i < n_; ++i) {
    const std::uint32_t b = row_ptr_[i];
    const std::uint32_t e = row_ptr_[i + 1];
    if (e < b) throw FormatError("CSR rowPtr is decreasing at row " + std::to_string(i));
    for (std::uint32_t k = b; k < e; ++k) {
      if (col_ind_[k] >= n_)
        throw FormatError("CSR column index out of range in row " + std::to_string(i));
      if (k > b && col_ind_[k] <= col_ind_[k - 1])
        throw FormatError("CSR column indices not strictly increasing in row " + std::to_string(i));
    }
  }
  if (values_) {
    if (values_->size() != col_ind_.size()) throw FormatError("CSR values length must equal nnz");
    for (float v : *values_)
      if (v == 0.0f) throw FormatError("CSR stores an explicit zero value");
  }
}

CsrMatrix CsrMatrix::from_entries(std::uint32_t n,
                                  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries) {
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  std::vector<std::uint32_t> row_ptr(std::size_t{n} + 1, 0);
  std::vector<std::uint32_t> col_ind;
  col_ind.reserve(entries.size());
  for (auto [r, c] : entries) {
    if (r >= n || c >= n) throw FormatError("entry outside an n x n matrix");
    ++row_ptr[r + 1];
    col_ind.push_back(c);
  }
  for (std::uint32_t i = 0; i < n; ++i) row_ptr[i + 1] += row_ptr[i];
  return CsrMatrix(n, std::move(row_ptr), std::move(col_ind));
}

bool CsrMatrix::contains(std::uint32_t r, std::uint32_t c) const {
  auto cols = row(r);
  return std::binary_search(cols.begin(), cols.end(), c);
}

CsrMatrix CsrMatrix::pattern() const { return CsrMatrix(n_, row_ptr_, col_ind_); }

CsrMatrix CsrMatrix::transposed() const {
  std::vector<std::uint32_t> row_ptr(std::size_t{n_} + 1, 0);
  for (std::uint32_t c : col_ind_) ++row_ptr[c + 1];
  for (std::uint32_t i = 0; i < n_; ++i) row_ptr[i + 1] += row_ptr[i];
  std::vector<std::uint32_t> col_ind(col_ind_.size());
  std::optional<std::vector<float>> values;
  if (values_) values.emplace(values_->size());
  std::vector<std::uint32_t> next(row_ptr.begin(), row_ptr.end() - 1);
  // Rows visited in ascending order keep every output row sorted.
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      const std::uint32_t dst = next[col_ind_[k]]++;
      col_ind[dst] = i;
      if (values) (*values)[dst] = (*values_)[k];
    }
  }
  return CsrMatrix(n_, std::move(row_ptr), std::move(col_ind), std::move(values));
}

bool CsrMatrix::same_pattern(const CsrMatrix& other) const {
  return n_ == other.n_ && row_ptr_ == other.row_ptr_ && col_ind_ == other.col_ind_;
}

bool CsrMatrix::is_symmetric() const { return same_pattern(transposed()); }

bool CsrMatrix::has_self_loops() const {
  for (std::uint32_t i = 0; i < n_; ++i)
    if (contains(i, i)) return true;
  return false;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> CsrMatrix::entries() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(col_ind_.size());
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t c : row(i)) out.emplace_back(i, c);
  return out;
}

}  // namespace bitblas
