#include "bitblas/vectors.hpp"

#include <bit>
#include <cstring>

#include "bitblas/b2sr_matrix.hpp"
#include "bitblas/error.hpp"

namespace bitblas {

BitVector::BitVector(std::uint32_t n) : n_(n), bytes_(((std::size_t{n} + 31) / 32) * 4, 0) {}

BitVector BitVector::from_indices(std::uint32_t n, std::span<const std::uint32_t> indices) {
  BitVector v(n);
  for (std::uint32_t i : indices) {
    if (i >= n) throw ParameterError("bit index out of range");
    v.set(i);
  }
  return v;
}

BitVector BitVector::from_indices(std::uint32_t n, std::initializer_list<std::uint32_t> indices) {
  return from_indices(n, std::span<const std::uint32_t>(indices.begin(), indices.size()));
}

BitVector BitVector::ones(std::uint32_t n) {
  BitVector v(n);
  std::memset(v.bytes_.data(), 0xFF, v.bytes_.size());
  v.clear_padding();
  return v;
}

void BitVector::set(std::uint32_t i, bool value) {
  if (i >= n_) throw ParameterError("bit index out of range");
  const auto bit = static_cast<std::uint8_t>(1u << (i & 7));
  if (value)
    bytes_[i >> 3] |= bit;
  else
    bytes_[i >> 3] &= static_cast<std::uint8_t>(~bit);
}

std::uint32_t BitVector::word(TileDim d, std::uint32_t j) const {
  if (std::uint64_t{j} * dim(d) >= std::uint64_t{bytes_.size()} * 8)
    throw ParameterError("bit-vector word index out of range");
  return detail::with_tile(d, [&](auto tile) { return decltype(tile)::segment(bytes_.data(), j); });
}

void BitVector::store_word(TileDim d, std::uint32_t j, std::uint32_t value) {
  const std::uint32_t width = dim(d);
  const std::uint64_t first = std::uint64_t{j} * width;
  if (first >= std::uint64_t{bytes_.size()} * 8) throw ParameterError("bit-vector word index out of range");
  value &= row_mask(d);
  if (first + width > n_) {
    const std::uint64_t valid = first >= n_ ? 0 : n_ - first;
    value &= valid == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << valid) - 1);
  }
  if (d == TileDim::k4) {
    std::uint8_t& b = bytes_[j >> 1];
    const unsigned shift = (j & 1u) * 4;
    b = static_cast<std::uint8_t>((b & ~(0xFu << shift)) | (value << shift));
    return;
  }
  std::uint8_t* p = bytes_.data() + first / 8;
  for (std::uint32_t k = 0; k < width / 8; ++k) p[k] = static_cast<std::uint8_t>(value >> (8 * k));
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (std::uint8_t b : bytes_) total += static_cast<std::size_t>(std::popcount(b));
  return total;
}

std::vector<std::uint32_t> BitVector::indices() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

BitVector BitVector::operator~() const {
  BitVector v(*this);
  for (auto& b : v.bytes_) b = static_cast<std::uint8_t>(~b);
  v.clear_padding();
  return v;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  if (other.n_ != n_) throw ParameterError("bit-vector length mismatch");
  for (std::size_t k = 0; k < bytes_.size(); ++k) bytes_[k] |= other.bytes_[k];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.n_ != n_) throw ParameterError("bit-vector length mismatch");
  for (std::size_t k = 0; k < bytes_.size(); ++k) bytes_[k] &= other.bytes_[k];
  return *this;
}

void BitVector::clear_padding() {
  const std::size_t full = n_ / 8;
  if (full < bytes_.size()) {
    const unsigned rem = n_ % 8;
    bytes_[full] &= static_cast<std::uint8_t>((1u << rem) - 1u);
    std::memset(bytes_.data() + full + 1, 0, bytes_.size() - full - 1);
  }
}

bool bitwise_equal(const DenseVector& a, const DenseVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::bit_cast<std::uint64_t>(a[i]) != std::bit_cast<std::uint64_t>(b[i])) return false;
  return true;
}

}  // namespace bitblas
