#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "bitblas/tile_dim.hpp"

namespace bitblas {

/// Dense bit-packed vector. Element i lives at byte i/8, bit i%8, so for any
/// tile width d the d elements starting at a d-aligned offset form one
/// little-endian row word (bit k = element offset+k). The byte buffer is
/// padded to a multiple of four bytes and padding bits are always zero.
class BitVector {
 public:
  explicit BitVector(std::uint32_t n = 0);

  static BitVector from_indices(std::uint32_t n, std::span<const std::uint32_t> indices);
  static BitVector from_indices(std::uint32_t n, std::initializer_list<std::uint32_t> indices);
  static BitVector ones(std::uint32_t n);

  std::uint32_t n() const noexcept { return n_; }
  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

  bool test(std::uint32_t i) const { return (bytes_[i >> 3] >> (i & 7)) & 1u; }
  void set(std::uint32_t i, bool value = true);

  /// Row word j at tile width d: elements [j*d, j*d+d).
  std::uint32_t word(TileDim d, std::uint32_t j) const;
  /// Overwrites row word j; bits addressing elements >= n are dropped.
  void store_word(TileDim d, std::uint32_t j, std::uint32_t value);

  std::size_t count() const;
  bool none() const { return count() == 0; }
  std::vector<std::uint32_t> indices() const;

  BitVector operator~() const;
  BitVector& operator|=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void clear_padding();

  std::uint32_t n_;
  std::vector<std::uint8_t> bytes_;
};

/// Full-precision vector (distances, ranks, labels, counts).
struct DenseVector {
  std::vector<double> values;

  DenseVector() = default;
  explicit DenseVector(std::size_t n, double fill = 0.0) : values(n, fill) {}
  DenseVector(std::vector<double> v) : values(std::move(v)) {}
  DenseVector(std::initializer_list<double> v) : values(v) {}

  std::size_t size() const noexcept { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  auto begin() const { return values.begin(); }
  auto end() const { return values.end(); }

  friend bool operator==(const DenseVector&, const DenseVector&) = default;
};

/// Bit-for-bit equality of the stored doubles (distinguishes -0.0, NaN payloads).
bool bitwise_equal(const DenseVector& a, const DenseVector& b);

}  // namespace bitblas
