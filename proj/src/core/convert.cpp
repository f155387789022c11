#include <algorithm>
#include <array>
#include <bit>
#include <limits>

#include "bitblas/b2sr_matrix.hpp"
#include "bitblas/error.hpp"

namespace bitblas {

namespace detail {

void transpose_tile(const std::uint32_t* in, std::uint32_t* out, std::uint32_t d) {
  for (std::uint32_t c = 0; c < d; ++c) out[c] = 0;
  for (std::uint32_t r = 0; r < d; ++r) {
    std::uint32_t w = in[r];
    while (w != 0) {
      const auto c = static_cast<std::uint32_t>(std::countr_zero(w));
      out[c] |= 1u << r;
      w &= w - 1;
    }
  }
}

}  // namespace detail

B2srMatrix csr_to_b2sr(const CsrMatrix& csr, TileDim tile_dim, const Exec& exec) {
  const std::uint32_t n = csr.n();
  if (n == 0) throw EmptyMatrixError("cannot convert an empty (n = 0) matrix");
  const std::uint32_t d = dim(tile_dim);
  const std::uint32_t ntr = tile_rows_for(n, tile_dim);
  auto row_ptr = csr.row_ptr();
  auto col_ind = csr.col_ind();

  // Pass 1: distinct tile columns of every tile-row.
  std::vector<std::vector<std::uint32_t>> cols(ntr);
  parallel_for(ntr, exec, 1, [&](std::size_t begin, std::size_t end) {
    for (std::size_t I = begin; I < end; ++I) {
      auto& out = cols[I];
      const std::uint32_t r0 = static_cast<std::uint32_t>(I) * d;
      const std::uint32_t r1 = std::min(n, r0 + d);
      for (std::uint32_t k = row_ptr[r0]; k < row_ptr[r1]; ++k) out.push_back(col_ind[k] / d);
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
  });

  std::vector<std::uint32_t> tile_row_ptr(std::size_t{ntr} + 1, 0);
  std::uint64_t total = 0;
  for (std::uint32_t I = 0; I < ntr; ++I) {
    total += cols[I].size();
    if (total > std::numeric_limits<std::uint32_t>::max())
      throw ParameterError("matrix needs more than 2^32-1 tiles");
    tile_row_ptr[I + 1] = static_cast<std::uint32_t>(total);
  }

  std::vector<std::uint32_t> tile_col_ind(total);
  std::vector<std::uint8_t> bit_tiles(total * tile_bytes(tile_dim), 0);

  // Pass 2: each tile-row writes only its own slice.
  detail::with_tile(tile_dim, [&](auto tile) {
    using T = decltype(tile);
    parallel_for(ntr, exec, 1, [&](std::size_t begin, std::size_t end) {
      for (std::size_t I = begin; I < end; ++I) {
        const std::uint32_t base = tile_row_ptr[I];
        std::copy(cols[I].begin(), cols[I].end(), tile_col_ind.begin() + base);
        const std::uint32_t r0 = static_cast<std::uint32_t>(I) * d;
        const std::uint32_t r1 = std::min(n, r0 + d);
        for (std::uint32_t row = r0; row < r1; ++row) {
          std::uint32_t t = base;
          std::uint32_t word = 0;
          std::uint32_t current = std::numeric_limits<std::uint32_t>::max();
          for (std::uint32_t k = row_ptr[row]; k < row_ptr[row + 1]; ++k) {
            const std::uint32_t J = col_ind[k] / d;
            if (J != current) {
              if (current != std::numeric_limits<std::uint32_t>::max())
                T::set_row(bit_tiles.data(), t, row - r0, word);
              while (tile_col_ind[t] != J) ++t;
              current = J;
              word = 0;
            }
            word |= 1u << (col_ind[k] % d);
          }
          if (current != std::numeric_limits<std::uint32_t>::max())
            T::set_row(bit_tiles.data(), t, row - r0, word);
        }
      }
    });
  });

  return B2srMatrix(n, tile_dim, std::move(tile_row_ptr), std::move(tile_col_ind), std::move(bit_tiles));
}

CsrMatrix b2sr_to_csr(const B2srMatrix& m) {
  const std::uint32_t n = m.n();
  const std::uint32_t d = m.dim();
  auto trp = m.tile_row_ptr();
  auto tci = m.tile_col_ind();
  std::vector<std::uint32_t> row_ptr(std::size_t{n} + 1, 0);
  std::vector<std::uint32_t> col_ind;
  col_ind.reserve(m.popcount());
  for (std::uint32_t I = 0; I < m.n_tile_rows(); ++I) {
    for (std::uint32_t r = 0; r < d && I * d + r < n; ++r) {
      for (std::uint32_t t = trp[I]; t < trp[I + 1]; ++t) {
        std::uint32_t w = m.row_word(t, r);
        while (w != 0) {
          const auto k = static_cast<std::uint32_t>(std::countr_zero(w));
          col_ind.push_back(tci[t] * d + k);
          w &= w - 1;
        }
      }
      row_ptr[I * d + r + 1] = static_cast<std::uint32_t>(col_ind.size());
    }
  }
  return CsrMatrix(n, std::move(row_ptr), std::move(col_ind));
}

B2srMatrix b2sr_transpose(const B2srMatrix& m) {
  const std::uint32_t ntr = m.n_tile_rows();
  const std::uint32_t d = m.dim();
  auto trp = m.tile_row_ptr();
  auto tci = m.tile_col_ind();
  const std::uint64_t nt = m.num_tiles();

  std::vector<std::uint32_t> out_ptr(std::size_t{ntr} + 1, 0);
  for (std::uint32_t J : tci) ++out_ptr[J + 1];
  for (std::uint32_t I = 0; I < ntr; ++I) out_ptr[I + 1] += out_ptr[I];
  std::vector<std::uint32_t> next(out_ptr.begin(), out_ptr.end() - 1);
  std::vector<std::uint32_t> out_col(nt);
  std::vector<std::uint8_t> out_tiles(m.bit_tiles().size(), 0);

  detail::with_tile(m.tile_dim(), [&](auto tile) {
    using T = decltype(tile);
    std::array<std::uint32_t, 32> rows{};
    std::array<std::uint32_t, 32> cols{};
    for (std::uint32_t I = 0; I < ntr; ++I) {
      for (std::uint32_t t = trp[I]; t < trp[I + 1]; ++t) {
        const std::uint32_t dst = next[tci[t]]++;
        out_col[dst] = I;
        for (std::uint32_t r = 0; r < d; ++r) rows[r] = T::row(m.bit_tiles().data(), t, r);
        detail::transpose_tile(rows.data(), cols.data(), d);
        for (std::uint32_t r = 0; r < d; ++r) T::set_row(out_tiles.data(), dst, r, cols[r]);
      }
    }
  });
  return B2srMatrix(m.n(), m.tile_dim(), std::move(out_ptr), std::move(out_col), std::move(out_tiles));
}

B2srMatrix drop_diagonal(const B2srMatrix& m) {
  const std::uint32_t ntr = m.n_tile_rows();
  const std::uint32_t d = m.dim();
  const std::uint32_t tb = tile_bytes(m.tile_dim());
  auto trp = m.tile_row_ptr();
  auto tci = m.tile_col_ind();
  std::vector<std::uint32_t> out_ptr(std::size_t{ntr} + 1, 0);
  std::vector<std::uint32_t> out_col;
  std::vector<std::uint8_t> out_tiles;
  out_col.reserve(tci.size());
  out_tiles.reserve(m.bit_tiles().size());

  detail::with_tile(m.tile_dim(), [&](auto tile) {
    using T = decltype(tile);
    for (std::uint32_t I = 0; I < ntr; ++I) {
      for (std::uint32_t t = trp[I]; t < trp[I + 1]; ++t) {
        const auto src = m.bit_tiles().subspan(std::size_t{t} * tb, tb);
        const auto dst = out_col.size();
        out_col.push_back(tci[t]);
        out_tiles.insert(out_tiles.end(), src.begin(), src.end());
        if (tci[t] != I) continue;
        std::uint32_t any = 0;
        for (std::uint32_t r = 0; r < d; ++r) {
          const std::uint32_t w = T::row(out_tiles.data(), dst, r) & ~(1u << r);
          T::set_row(out_tiles.data(), dst, r, w);
          any |= w;
        }
        if (any == 0) {
          out_col.pop_back();
          out_tiles.resize(out_tiles.size() - tb);
        }
      }
      out_ptr[I + 1] = static_cast<std::uint32_t>(out_col.size());
    }
  });
  return B2srMatrix(m.n(), m.tile_dim(), std::move(out_ptr), std::move(out_col), std::move(out_tiles));
}

}  // namespace bitblas
