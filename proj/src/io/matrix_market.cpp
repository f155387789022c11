#include "bitblas/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <tuple>
#include <vector>

#include "bitblas/error.hpp"

namespace bitblas {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

struct Entry {
  std::uint32_t row;
  std::uint32_t col;
  float value;
};

CsrMatrix assemble(std::uint32_t n, std::vector<Entry> entries, bool keep_values) {
  // Stable sort keeps file order inside a duplicate group; the last one wins.
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
  std::vector<std::uint32_t> row_ptr(std::size_t{n} + 1, 0);
  std::vector<std::uint32_t> col_ind;
  std::vector<float> values;
  col_ind.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const Entry& e = entries[k];
    const bool dup = !col_ind.empty() && k > 0 && entries[k - 1].row == e.row && entries[k - 1].col == e.col;
    if (dup) {
      if (keep_values) values.back() = e.value;
      continue;
    }
    ++row_ptr[e.row + 1];
    col_ind.push_back(e.col);
    if (keep_values) values.push_back(e.value);
  }
  for (std::uint32_t i = 0; i < n; ++i) row_ptr[i + 1] += row_ptr[i];
  if (!keep_values) return CsrMatrix(n, std::move(row_ptr), std::move(col_ind));
  return CsrMatrix(n, std::move(row_ptr), std::move(col_ind), std::move(values));
}

}  // namespace

IngestResult ingest_matrix_market(std::istream& in, const IngestOptions& opts) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw ParseError("empty input, expected a %%MatrixMarket header", 1);
  ++line_no;
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket") throw ParseError("missing %%MatrixMarket banner", line_no);
  object = lower(object);
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (object != "matrix") throw ParseError("unsupported object '" + object + "'", line_no);
  if (format != "coordinate") throw ParseError("unsupported format '" + format + "' (only coordinate)", line_no);
  if (field != "pattern" && field != "real" && field != "integer")
    throw ParseError("unsupported field '" + field + "'", line_no);
  if (symmetry != "general" && symmetry != "symmetric")
    throw ParseError("unsupported symmetry '" + symmetry + "'", line_no);
  const bool has_values = field != "pattern";

  // Size line, after comments and blank lines.
  std::uint64_t rows = 0, cols = 0, declared = 0;
  while (true) {
    if (!std::getline(in, line)) throw ParseError("missing size line", line_no + 1);
    ++line_no;
    if (line.empty() || line[0] == '%' || blank(line)) continue;
    std::istringstream size(line);
    if (!(size >> rows >> cols >> declared)) throw ParseError("malformed size line", line_no);
    break;
  }
  if (rows != cols)
    throw ParseError("matrix is not square (" + std::to_string(rows) + " x " + std::to_string(cols) + ")", line_no);
  if (rows > std::numeric_limits<std::uint32_t>::max() - 1) throw ParseError("matrix dimension too large", line_no);
  const auto n = static_cast<std::uint32_t>(rows);

  std::vector<Entry> entries;
  entries.reserve(declared * (symmetry == "symmetric" || opts.symmetrize == Symmetrize::Union ? 2 : 1));
  std::uint64_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%' || blank(line)) continue;
    if (seen == declared) throw ParseError("more entries than the declared " + std::to_string(declared), line_no);
    std::istringstream fields(line);
    std::uint64_t r = 0, c = 0;
    double value = 1.0;
    if (!(fields >> r >> c)) throw ParseError("malformed entry", line_no);
    if (has_values && !(fields >> value)) throw ParseError("entry is missing its value", line_no);
    if (r < 1 || r > n || c < 1 || c > n) throw ParseError("entry index out of range", line_no);
    ++seen;
    if (has_values && value == 0.0) {
      if (opts.drop_explicit_zeros) continue;
      if (!opts.binarize)
        throw ParseError("explicit zero value kept without binarization (use drop-explicit-zeros)", line_no);
    }
    Entry e{static_cast<std::uint32_t>(r - 1), static_cast<std::uint32_t>(c - 1),
            opts.binarize ? 1.0f : static_cast<float>(value)};
    if (opts.drop_self_loops && e.row == e.col) continue;
    entries.push_back(e);
    if (symmetry == "symmetric" && e.row != e.col) entries.push_back({e.col, e.row, e.value});
  }
  if (seen != declared)
    throw ParseError("expected " + std::to_string(declared) + " entries, found " + std::to_string(seen), line_no);

  if (opts.symmetrize == Symmetrize::Union) {
    const std::size_t count = entries.size();
    for (std::size_t k = 0; k < count; ++k)
      if (entries[k].row != entries[k].col) entries.push_back({entries[k].col, entries[k].row, entries[k].value});
  }

  IngestResult result;
  result.matrix = assemble(n, std::move(entries), has_values && !opts.binarize);
  result.file_entries = seen;
  result.field = field;
  result.symmetry = symmetry;
  return result;
}

IngestResult ingest_matrix_market_file(const std::filesystem::path& path, const IngestOptions& opts) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return ingest_matrix_market(in, opts);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

CsrMatrix read_matrix_market(const std::filesystem::path& path, const IngestOptions& opts) {
  return ingest_matrix_market_file(path, opts).matrix;
}

void write_matrix_market(const CsrMatrix& csr, std::ostream& out) {
  const auto& values = csr.values();
  out << "%%MatrixMarket matrix coordinate " << (values ? "real" : "pattern") << " general\n";
  out << csr.n() << ' ' << csr.n() << ' ' << csr.nnz() << '\n';
  char buf[32];
  for (std::uint32_t i = 0; i < csr.n(); ++i) {
    for (std::uint32_t k = csr.row_ptr()[i]; k < csr.row_ptr()[i + 1]; ++k) {
      out << (i + 1) << ' ' << (csr.col_ind()[k] + 1);
      if (values) {
        std::snprintf(buf, sizeof buf, "%.9g", static_cast<double>((*values)[k]));
        out << ' ' << buf;
      }
      out << '\n';
    }
  }
}

void write_matrix_market_file(const CsrMatrix& csr, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_matrix_market(csr, out);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

CsrMatrix lower_triangle(const CsrMatrix& csr) {
  const auto& values = csr.values();
  std::vector<std::uint32_t> row_ptr(std::size_t{csr.n()} + 1, 0);
  std::vector<std::uint32_t> col_ind;
  std::vector<float> kept;
  for (std::uint32_t i = 0; i < csr.n(); ++i) {
    for (std::uint32_t k = csr.row_ptr()[i]; k < csr.row_ptr()[i + 1]; ++k) {
      if (csr.col_ind()[k] >= i) break;
      col_ind.push_back(csr.col_ind()[k]);
      if (values) kept.push_back((*values)[k]);
    }
    row_ptr[i + 1] = static_cast<std::uint32_t>(col_ind.size());
  }
  if (!values) return CsrMatrix(csr.n(), std::move(row_ptr), std::move(col_ind));
  return CsrMatrix(csr.n(), std::move(row_ptr), std::move(col_ind), std::move(kept));
}

CsrMatrix symmetrize_union(const CsrMatrix& csr) {
  auto entries = csr.entries();
  const std::size_t count = entries.size();
  for (std::size_t k = 0; k < count; ++k) entries.emplace_back(entries[k].second, entries[k].first);
  return CsrMatrix::from_entries(csr.n(), std::move(entries));
}

}  // namespace bitblas
