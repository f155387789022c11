#include <bit>
#include <numeric>
#include <string>
#include <vector>

#include "bitblas/error.hpp"
#include "bitblas/kernels.hpp"

namespace bitblas {

namespace {

// Largest n with n^3 < 2^64: the worst-case product sum must fit the counter.
constexpr std::uint32_t kMaxBmmDimension = 2642245;

void check_operands(const B2srMatrix& a, const B2srMatrix& b, const char* what) {
  if (a.n() != b.n()) throw ParameterError(std::string(what) + " dimension mismatch");
  if (a.tile_dim() != b.tile_dim()) throw ParameterError(std::string(what) + " tile dimension mismatch");
  if (a.n() > kMaxBmmDimension) throw ParameterError("bmm sum could overflow 64 bits for n = " + std::to_string(a.n()));
}

// Column words of every tile of B: word c of tile u holds column c as bits
// indexed by row.
template <class T>
std::vector<std::uint32_t> column_words(const B2srMatrix& b) {
  std::vector<std::uint32_t> cols(b.num_tiles() * T::kDim);
  std::uint32_t rows[32];
  for (std::uint64_t u = 0; u < b.num_tiles(); ++u) {
    for (std::uint32_t r = 0; r < T::kDim; ++r) rows[r] = T::row(b.bit_tiles().data(), u, r);
    detail::transpose_tile(rows, cols.data() + u * T::kDim, T::kDim);
  }
  return cols;
}

template <class T, bool Masked>
std::uint64_t bmm_sum(const B2srMatrix& a, const B2srMatrix& b, const B2srMatrix* mask, const Exec& exec) {
  const std::uint32_t ntr = a.n_tile_rows();
  const auto bcols = column_words<T>(b);
  auto a_ptr = a.tile_row_ptr();
  auto a_col = a.tile_col_ind();
  auto b_ptr = b.tile_row_ptr();
  auto b_col = b.tile_col_ind();
  std::vector<std::uint64_t> partial(ntr, 0);

  parallel_for(ntr, exec, 1, [&](std::size_t begin, std::size_t end) {
    // Mask tile index by tile column for the current tile-row, -1 if absent.
    std::vector<std::int64_t> mask_at;
    if constexpr (Masked) mask_at.assign(ntr, -1);
    std::uint32_t arows[32];
    for (std::size_t I = begin; I < end; ++I) {
      if constexpr (Masked) {
        auto m_ptr = mask->tile_row_ptr();
        auto m_col = mask->tile_col_ind();
        for (std::uint32_t t = m_ptr[I]; t < m_ptr[I + 1]; ++t) mask_at[m_col[t]] = t;
      }
      std::uint64_t sum = 0;
      for (std::uint32_t t = a_ptr[I]; t < a_ptr[I + 1]; ++t) {
        const std::uint32_t K = a_col[t];
        for (std::uint32_t r = 0; r < T::kDim; ++r) arows[r] = T::row(a.bit_tiles().data(), t, r);
        for (std::uint32_t u = b_ptr[K]; u < b_ptr[K + 1]; ++u) {
          const std::uint32_t* bc = bcols.data() + std::size_t{u} * T::kDim;
          if constexpr (Masked) {
            const std::int64_t mt = mask_at[b_col[u]];
            if (mt < 0) continue;
            for (std::uint32_t r = 0; r < T::kDim; ++r) {
              std::uint32_t keep = T::row(mask->bit_tiles().data(), static_cast<std::uint64_t>(mt), r);
              while (keep != 0) {
                const auto c = static_cast<std::uint32_t>(std::countr_zero(keep));
                keep &= keep - 1;
                sum += static_cast<std::uint64_t>(std::popcount(arows[r] & bc[c]));
              }
            }
          } else {
            for (std::uint32_t r = 0; r < T::kDim; ++r) {
              if (arows[r] == 0) continue;
              for (std::uint32_t c = 0; c < T::kDim; ++c)
                sum += static_cast<std::uint64_t>(std::popcount(arows[r] & bc[c]));
            }
          }
        }
      }
      partial[I] = sum;
      if constexpr (Masked) {
        auto m_ptr = mask->tile_row_ptr();
        auto m_col = mask->tile_col_ind();
        for (std::uint32_t t = m_ptr[I]; t < m_ptr[I + 1]; ++t) mask_at[m_col[t]] = -1;
      }
    }
  });
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

}  // namespace

std::uint64_t bmm_bin_bin_sum(const B2srMatrix& a, const B2srMatrix& b, const Exec& exec) {
  check_operands(a, b, "bmm operand");
  return detail::with_tile(a.tile_dim(),
                           [&](auto tile) { return bmm_sum<decltype(tile), false>(a, b, nullptr, exec); });
}

std::uint64_t bmm_bin_bin_sum_masked(const B2srMatrix& a, const B2srMatrix& b, const B2srMatrix& mask,
                                     const Exec& exec) {
  check_operands(a, b, "bmm operand");
  check_operands(a, mask, "bmm mask");
  return detail::with_tile(a.tile_dim(),
                           [&](auto tile) { return bmm_sum<decltype(tile), true>(a, b, &mask, exec); });
}

}  // namespace bitblas
