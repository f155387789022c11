#include <array>
#include <bit>
#include <string>

#include "bitblas/error.hpp"
#include "bitblas/kernels.hpp"

namespace bitblas {

namespace {

using detail::Tile;

void check_vector(const B2srMatrix& a, std::uint32_t len, const char* what) {
  if (len != a.n())
    throw ParameterError(std::string(what) + " length " + std::to_string(len) + " does not match matrix dimension " +
                         std::to_string(a.n()));
}

// Nibble outputs of two B2SR-4 tile-rows share a byte.
std::size_t bit_output_align(TileDim d) { return d == TileDim::k4 ? 2 : 1; }

template <class T, bool Masked>
BitVector bin_bin_bin(const B2srMatrix& a, const BitVector& x, const BitVector* keep, const Exec& exec) {
  BitVector out(a.n());
  const std::uint8_t* tiles = a.bit_tiles().data();
  auto trp = a.tile_row_ptr();
  auto tci = a.tile_col_ind();
  parallel_for(a.n_tile_rows(), exec, bit_output_align(T::kTileDim), [&](std::size_t begin, std::size_t end) {
    for (std::size_t I = begin; I < end; ++I) {
      std::uint32_t hits = 0;
      for (std::uint32_t t = trp[I]; t < trp[I + 1]; ++t) {
        const std::uint32_t xw = T::segment(x.bytes().data(), tci[t]);
        for (std::uint32_t r = 0; r < T::kDim; ++r)
          hits |= static_cast<std::uint32_t>((T::row(tiles, t, r) & xw) != 0) << r;
      }
      if constexpr (Masked) hits &= T::segment(keep->bytes().data(), static_cast<std::uint32_t>(I));
      out.store_word(T::kTileDim, static_cast<std::uint32_t>(I), hits);
    }
  });
  return out;
}

template <class T, bool Masked>
DenseVector bin_bin_full(const B2srMatrix& a, const BitVector& x, const BitVector* keep, const Exec& exec) {
  const std::uint32_t n = a.n();
  DenseVector out(n, 0.0);
  const std::uint8_t* tiles = a.bit_tiles().data();
  auto trp = a.tile_row_ptr();
  auto tci = a.tile_col_ind();
  parallel_for(a.n_tile_rows(), exec, 1, [&](std::size_t begin, std::size_t end) {
    std::array<std::uint32_t, 32> acc{};
    for (std::size_t I = begin; I < end; ++I) {
      acc.fill(0);
      for (std::uint32_t t = trp[I]; t < trp[I + 1]; ++t) {
        const std::uint32_t xw = T::segment(x.bytes().data(), tci[t]);
        for (std::uint32_t r = 0; r < T::kDim; ++r)
          acc[r] += static_cast<std::uint32_t>(std::popcount(T::row(tiles, t, r) & xw));
      }
      std::uint32_t allowed = ~0u;
      if constexpr (Masked) allowed = T::segment(keep->bytes().data(), static_cast<std::uint32_t>(I));
      const std::uint32_t row0 = static_cast<std::uint32_t>(I) * T::kDim;
      for (std::uint32_t r = 0; r < T::kDim && row0 + r < n; ++r)
        out[row0 + r] = ((allowed >> r) & 1u) ? static_cast<double>(acc[r]) : 0.0;
    }
  });
  return out;
}

template <class T, Semiring::Kind K, bool Scaled, bool Masked>
DenseVector bin_full_full(const B2srMatrix& a, const DenseVector& x, const Semiring& s,
                          std::span<const double> scale, const BitVector* keep, const Exec& exec) {
  const std::uint32_t n = a.n();
  const double identity = s.identity();
  const double inc = s.edge_increment;
  DenseVector out(n, identity);
  const std::uint8_t* tiles = a.bit_tiles().data();
  auto trp = a.tile_row_ptr();
  auto tci = a.tile_col_ind();
  const double* xv = x.values.data();
  parallel_for(a.n_tile_rows(), exec, 1, [&](std::size_t begin, std::size_t end) {
    std::array<double, 32> acc{};
    for (std::size_t I = begin; I < end; ++I) {
      acc.fill(identity);
      for (std::uint32_t t = trp[I]; t < trp[I + 1]; ++t) {
        const std::uint32_t col0 = tci[t] * T::kDim;
        for (std::uint32_t r = 0; r < T::kDim; ++r) {
          std::uint32_t w = T::row(tiles, t, r);
          double v = acc[r];
          while (w != 0) {
            const std::uint32_t j = col0 + static_cast<std::uint32_t>(std::countr_zero(w));
            w &= w - 1;
            if constexpr (K == Semiring::Kind::Arithmetic) {
              if constexpr (Scaled) {
                if (scale[j] == 0.0)
                  throw DivisionByZeroError("scale vector is zero at column " + std::to_string(j) +
                                            ", which holds an edge");
                v = v + xv[j] / scale[j];
              } else {
                v = v + xv[j];
              }
            } else if constexpr (K == Semiring::Kind::MinPlus) {
              v = std::min(v, xv[j] + inc);
            } else {
              v = std::max(v, xv[j]);
            }
          }
          acc[r] = v;
        }
      }
      std::uint32_t allowed = ~0u;
      if constexpr (Masked) allowed = T::segment(keep->bytes().data(), static_cast<std::uint32_t>(I));
      const std::uint32_t row0 = static_cast<std::uint32_t>(I) * T::kDim;
      for (std::uint32_t r = 0; r < T::kDim && row0 + r < n; ++r)
        out[row0 + r] = ((allowed >> r) & 1u) ? acc[r] : identity;
    }
  });
  return out;
}

template <bool Masked>
DenseVector dispatch_full_full(const B2srMatrix& a, const DenseVector& x, const Semiring& s,
                               std::span<const double> scale, const BitVector* keep, const Exec& exec) {
  if (x.size() != a.n()) throw ParameterError("input vector length does not match matrix dimension");
  if (s.kind == Semiring::Kind::Boolean)
    throw ParameterError("bmv_bin_full_full does not take the Boolean semiring; use the bin-bin schemes");
  const bool scaled = !scale.empty();
  if (scaled) {
    if (s.kind != Semiring::Kind::Arithmetic) throw ParameterError("a scale vector is only valid with Arithmetic");
    if (scale.size() != a.n()) throw ParameterError("scale vector length does not match matrix dimension");
  }
  return detail::with_tile(a.tile_dim(), [&](auto tile) {
    using T = decltype(tile);
    switch (s.kind) {
      case Semiring::Kind::MinPlus:
        return bin_full_full<T, Semiring::Kind::MinPlus, false, Masked>(a, x, s, scale, keep, exec);
      case Semiring::Kind::MaxTimes:
        return bin_full_full<T, Semiring::Kind::MaxTimes, false, Masked>(a, x, s, scale, keep, exec);
      default:
        return scaled ? bin_full_full<T, Semiring::Kind::Arithmetic, true, Masked>(a, x, s, scale, keep, exec)
                      : bin_full_full<T, Semiring::Kind::Arithmetic, false, Masked>(a, x, s, scale, keep, exec);
    }
  });
}

}  // namespace

BitVector bmv_bin_bin_bin(const B2srMatrix& a, const BitVector& x, const Exec& exec) {
  check_vector(a, x.n(), "input vector");
  return detail::with_tile(a.tile_dim(),
                           [&](auto tile) { return bin_bin_bin<decltype(tile), false>(a, x, nullptr, exec); });
}

BitVector bmv_bin_bin_bin_masked(const B2srMatrix& a, const BitVector& x, const BitVector& keep, const Exec& exec) {
  check_vector(a, x.n(), "input vector");
  check_vector(a, keep.n(), "keep mask");
  return detail::with_tile(a.tile_dim(),
                           [&](auto tile) { return bin_bin_bin<decltype(tile), true>(a, x, &keep, exec); });
}

DenseVector bmv_bin_bin_full(const B2srMatrix& a, const BitVector& x, const Exec& exec) {
  check_vector(a, x.n(), "input vector");
  return detail::with_tile(a.tile_dim(),
                           [&](auto tile) { return bin_bin_full<decltype(tile), false>(a, x, nullptr, exec); });
}

DenseVector bmv_bin_bin_full_masked(const B2srMatrix& a, const BitVector& x, const BitVector& keep,
                                    const Exec& exec) {
  check_vector(a, x.n(), "input vector");
  check_vector(a, keep.n(), "keep mask");
  return detail::with_tile(a.tile_dim(),
                           [&](auto tile) { return bin_bin_full<decltype(tile), true>(a, x, &keep, exec); });
}

DenseVector bmv_bin_full_full(const B2srMatrix& a, const DenseVector& x, const Semiring& s,
                              std::span<const double> scale, const Exec& exec) {
  return dispatch_full_full<false>(a, x, s, scale, nullptr, exec);
}

DenseVector bmv_bin_full_full_masked(const B2srMatrix& a, const DenseVector& x, const Semiring& s,
                                     const BitVector& keep, std::span<const double> scale, const Exec& exec) {
  check_vector(a, keep.n(), "keep mask");
  return dispatch_full_full<true>(a, x, s, scale, &keep, exec);
}

}  // namespace bitblas
