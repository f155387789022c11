#include "bitblas/container.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>

#include "bitblas/error.hpp"

namespace bitblas {

namespace {

constexpr std::array<char, 4> kMagic = {'B', '2', 'S', 'R'};

template <class Word>
void put(std::ostream& out, Word w) {
  std::array<std::uint8_t, sizeof(Word)> buf{};
  detail::store_le<Word>(buf.data(), w);
  out.write(reinterpret_cast<const char*>(buf.data()), buf.size());
}

template <class Word>
Word get(std::istream& in) {
  std::array<std::uint8_t, sizeof(Word)> buf{};
  if (!in.read(reinterpret_cast<char*>(buf.data()), buf.size())) throw FormatError("truncated B2SR container");
  return detail::load_le<Word>(buf.data());
}

std::vector<std::uint32_t> get_u32_array(std::istream& in, std::uint64_t count) {
  std::vector<std::uint32_t> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(get<std::uint32_t>(in));
  return out;
}

}  // namespace

void write_b2sr(const B2srMatrix& m, std::ostream& out) {
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, kContainerVersion);
  put<std::uint32_t>(out, m.n());
  put<std::uint32_t>(out, m.dim());
  put<std::uint32_t>(out, m.n_tile_rows());
  put<std::uint64_t>(out, m.num_tiles());
  for (std::uint32_t v : m.tile_row_ptr()) put<std::uint32_t>(out, v);
  for (std::uint32_t v : m.tile_col_ind()) put<std::uint32_t>(out, v);
  auto tiles = m.bit_tiles();
  out.write(reinterpret_cast<const char*>(tiles.data()), static_cast<std::streamsize>(tiles.size()));
}

B2srMatrix read_b2sr(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) throw FormatError("not a B2SR container (bad magic)");
  const auto version = get<std::uint32_t>(in);
  if (version != kContainerVersion)
    throw FormatError("unsupported B2SR container version " + std::to_string(version));
  const auto n = get<std::uint32_t>(in);
  const auto d = get<std::uint32_t>(in);
  TileDim td;
  try {
    td = tile_dim_from_int(d);
  } catch (const ParameterError&) {
    throw FormatError("container holds invalid tile dimension " + std::to_string(d));
  }
  const auto ntr = get<std::uint32_t>(in);
  const auto num_tiles = get<std::uint64_t>(in);
  if (n == 0 || ntr != tile_rows_for(n, td)) throw FormatError("container header is inconsistent");
  // Every tile holds at least one bit of an n x n matrix.
  if (num_tiles > std::uint64_t{ntr} * ntr) throw FormatError("container tile count exceeds the tile grid");
  auto row_ptr = get_u32_array(in, std::uint64_t{ntr} + 1);
  auto col_ind = get_u32_array(in, num_tiles);
  std::vector<std::uint8_t> tiles(num_tiles * tile_bytes(td));
  if (!tiles.empty() &&
      !in.read(reinterpret_cast<char*>(tiles.data()), static_cast<std::streamsize>(tiles.size())))
    throw FormatError("truncated B2SR container");
  return B2srMatrix(n, td, std::move(row_ptr), std::move(col_ind), std::move(tiles));
}

void save_b2sr(const B2srMatrix& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_b2sr(m, out);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

B2srMatrix load_b2sr(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_b2sr(in);
}

}  // namespace bitblas
