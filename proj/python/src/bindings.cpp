#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/operators.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "bitblas/algorithms.hpp"
#include "bitblas/b2sr_matrix.hpp"
#include "bitblas/cli.hpp"
#include "bitblas/container.hpp"
#include "bitblas/error.hpp"
#include "bitblas/kernels.hpp"
#include "bitblas/matrix_market.hpp"
#include "bitblas/report.hpp"
#include "bitblas/sample_profile.hpp"

namespace py = pybind11;
using namespace bitblas;

namespace {

TileDim to_tile(int d) { return tile_dim_from_int(d); }

BitVector bits_from(std::uint32_t n, const std::vector<std::uint32_t>& indices) {
  return BitVector::from_indices(n, indices);
}

Exec exec_for(unsigned workers) { return Exec{workers}; }

py::object load_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

IngestOptions ingest_options(bool symmetrize, bool drop_self_loops, bool drop_zeros) {
  IngestOptions o;
  o.symmetrize = symmetrize ? Symmetrize::Union : Symmetrize::None;
  o.drop_self_loops = drop_self_loops;
  o.drop_explicit_zeros = drop_zeros;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "B2SR bit-block sparse matrices and bit-packed graph kernels";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto param = py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<InconsistencyError>(m, "InconsistencyError", base.ptr());
  py::register_exception<DivisionByZeroError>(m, "DivisionByZeroError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  (void)param;

  py::class_<CsrMatrix>(m, "CsrMatrix")
      .def(py::init<>())
      .def(py::init([](std::uint32_t n, std::vector<std::uint32_t> row_ptr, std::vector<std::uint32_t> col_ind,
                       std::optional<std::vector<float>> values) {
             return CsrMatrix(n, std::move(row_ptr), std::move(col_ind), std::move(values));
           }),
           py::arg("n"), py::arg("row_ptr"), py::arg("col_ind"), py::arg("values") = py::none())
      .def_static("from_entries", &CsrMatrix::from_entries, py::arg("n"), py::arg("entries"))
      .def_property_readonly("n", &CsrMatrix::n)
      .def_property_readonly("nnz", &CsrMatrix::nnz)
      .def_property_readonly("row_ptr",
                             [](const CsrMatrix& c) { return std::vector<std::uint32_t>(c.row_ptr().begin(), c.row_ptr().end()); })
      .def_property_readonly("col_ind",
                             [](const CsrMatrix& c) { return std::vector<std::uint32_t>(c.col_ind().begin(), c.col_ind().end()); })
      .def_property_readonly("values", [](const CsrMatrix& c) { return c.values(); })
      .def("entries", &CsrMatrix::entries)
      .def("transposed", &CsrMatrix::transposed)
      .def("is_symmetric", &CsrMatrix::is_symmetric)
      .def("same_pattern", &CsrMatrix::same_pattern)
      .def(py::self == py::self)
      .def("__repr__", [](const CsrMatrix& c) {
        return "CsrMatrix(n=" + std::to_string(c.n()) + ", nnz=" + std::to_string(c.nnz()) + ")";
      });

  py::class_<B2srMatrix>(m, "B2srMatrix")
      .def(py::init([](const CsrMatrix& csr, int tile_dim, unsigned workers) {
             return csr_to_b2sr(csr, to_tile(tile_dim), exec_for(workers));
           }),
           py::arg("csr"), py::arg("tile_dim") = 8, py::arg("workers") = 1)
      .def_property_readonly("n", &B2srMatrix::n)
      .def_property_readonly("tile_dim", &B2srMatrix::dim)
      .def_property_readonly("n_tile_rows", &B2srMatrix::n_tile_rows)
      .def_property_readonly("num_tiles", &B2srMatrix::num_tiles)
      .def_property_readonly("tile_row_ptr",
                             [](const B2srMatrix& b) {
                               return std::vector<std::uint32_t>(b.tile_row_ptr().begin(), b.tile_row_ptr().end());
                             })
      .def_property_readonly("tile_col_ind",
                             [](const B2srMatrix& b) {
                               return std::vector<std::uint32_t>(b.tile_col_ind().begin(), b.tile_col_ind().end());
                             })
      .def_property_readonly("bit_tiles",
                             [](const B2srMatrix& b) {
                               return py::bytes(reinterpret_cast<const char*>(b.bit_tiles().data()), b.bit_tiles().size());
                             })
      .def("test", &B2srMatrix::test, py::arg("row"), py::arg("col"))
      .def("popcount", &B2srMatrix::popcount)
      .def("to_csr", &b2sr_to_csr)
      .def("transpose", &b2sr_transpose)
      .def("storage_bytes", [](const B2srMatrix& b) { return storage_bytes(b); })
      .def("compression_ratio", &compression_ratio, py::arg("csr"))
      .def("save", &save_b2sr, py::arg("path"))
      .def_static("load", &load_b2sr, py::arg("path"))
      .def(py::self == py::self)
      .def("__repr__", [](const B2srMatrix& b) {
        return "B2srMatrix(n=" + std::to_string(b.n()) + ", tile_dim=" + std::to_string(b.dim()) +
               ", num_tiles=" + std::to_string(b.num_tiles()) + ")";
      });

  m.def("csr_storage_bytes", [](const CsrMatrix& c) { return csr_storage_bytes(c); });
  m.def("nonzero_density", &nonzero_density);

  m.def(
      "read_matrix_market",
      [](const std::filesystem::path& path, bool symmetrize, bool drop_self_loops, bool drop_zeros) {
        return read_matrix_market(path, ingest_options(symmetrize, drop_self_loops, drop_zeros));
      },
      py::arg("path"), py::arg("symmetrize") = false, py::arg("drop_self_loops") = false,
      py::arg("drop_zeros") = false);
  m.def(
      "parse_matrix_market",
      [](const std::string& text, bool symmetrize, bool drop_self_loops, bool drop_zeros) {
        std::istringstream in(text);
        return ingest_matrix_market(in, ingest_options(symmetrize, drop_self_loops, drop_zeros)).matrix;
      },
      py::arg("text"), py::arg("symmetrize") = false, py::arg("drop_self_loops") = false,
      py::arg("drop_zeros") = false);
  m.def("write_matrix_market", &write_matrix_market_file, py::arg("csr"), py::arg("path"));
  m.def("lower_triangle", &lower_triangle);

  m.def(
      "sample_profile",
      [](const CsrMatrix& csr, std::uint32_t samples, std::uint64_t seed) {
        return load_json(to_json(sample_profile(csr, samples, seed)));
      },
      py::arg("csr"), py::arg("samples"), py::arg("seed") = 0,
      "Sampling profile report as a dict (same layout as the CLI JSON).");

  // Vectors cross the boundary as index lists (bit vectors) or float lists.
  m.def(
      "bmv_bin_bin_bin",
      [](const B2srMatrix& a, const std::vector<std::uint32_t>& x, std::optional<std::vector<std::uint32_t>> keep,
         unsigned workers) {
        const BitVector xv = bits_from(a.n(), x);
        const BitVector out = keep ? bmv_bin_bin_bin_masked(a, xv, bits_from(a.n(), *keep), exec_for(workers))
                                   : bmv_bin_bin_bin(a, xv, exec_for(workers));
        return out.indices();
      },
      py::arg("a"), py::arg("x"), py::arg("keep") = py::none(), py::arg("workers") = 1);
  m.def(
      "bmv_bin_bin_full",
      [](const B2srMatrix& a, const std::vector<std::uint32_t>& x, std::optional<std::vector<std::uint32_t>> keep,
         unsigned workers) {
        const BitVector xv = bits_from(a.n(), x);
        return (keep ? bmv_bin_bin_full_masked(a, xv, bits_from(a.n(), *keep), exec_for(workers))
                     : bmv_bin_bin_full(a, xv, exec_for(workers)))
            .values;
      },
      py::arg("a"), py::arg("x"), py::arg("keep") = py::none(), py::arg("workers") = 1);
  m.def(
      "bmv_bin_full_full",
      [](const B2srMatrix& a, std::vector<double> x, const std::string& semiring,
         std::optional<std::vector<double>> scale, std::optional<std::vector<std::uint32_t>> keep, unsigned workers) {
        Semiring s;
        if (semiring == "arithmetic") s = Semiring::arithmetic();
        else if (semiring == "min_plus" || semiring == "min_plus1") s = Semiring::min_plus(1);
        else if (semiring == "min_plus0") s = Semiring::min_plus(0);
        else if (semiring == "max_times") s = Semiring::max_times();
        else if (semiring == "boolean") s = Semiring::boolean();
        else throw ParameterError("unknown semiring '" + semiring + "'");
        const DenseVector xv(std::move(x));
        std::span<const double> sc;
        if (scale) sc = *scale;
        return (keep ? bmv_bin_full_full_masked(a, xv, s, bits_from(a.n(), *keep), sc, exec_for(workers))
                     : bmv_bin_full_full(a, xv, s, sc, exec_for(workers)))
            .values;
      },
      py::arg("a"), py::arg("x"), py::arg("semiring") = "arithmetic", py::arg("scale") = py::none(),
      py::arg("keep") = py::none(), py::arg("workers") = 1);
  m.def(
      "bmm_bin_bin_sum",
      [](const B2srMatrix& a, const B2srMatrix& b, const B2srMatrix* mask, unsigned workers) {
        return mask ? bmm_bin_bin_sum_masked(a, b, *mask, exec_for(workers)) : bmm_bin_bin_sum(a, b, exec_for(workers));
      },
      py::arg("a"), py::arg("b"), py::arg("mask") = nullptr, py::arg("workers") = 1);

  py::class_<AlgoResult>(m, "AlgoResult")
      .def_property_readonly("per_vertex", [](const AlgoResult& r) { return r.per_vertex.values; })
      .def_readonly("count", &AlgoResult::count)
      .def_readonly("iterations", &AlgoResult::iterations)
      .def_readonly("converged", &AlgoResult::converged);

  m.def(
      "bfs", [](const B2srMatrix& a, std::uint32_t src, unsigned workers) { return bfs(a, src, Traversal::OutEdges, exec_for(workers)); },
      py::arg("a"), py::arg("src"), py::arg("workers") = 1);
  m.def(
      "sssp", [](const B2srMatrix& a, std::uint32_t src, unsigned workers) { return sssp(a, src, Traversal::OutEdges, exec_for(workers)); },
      py::arg("a"), py::arg("src"), py::arg("workers") = 1);
  m.def(
      "pagerank",
      [](const B2srMatrix& a, double alpha, double epsilon, std::uint32_t max_iter, unsigned workers) {
        return pagerank_from_adjacency(a, AlgoParams{alpha, epsilon, max_iter}, exec_for(workers));
      },
      py::arg("a"), py::arg("alpha") = 0.85, py::arg("epsilon") = 1e-9, py::arg("max_iter") = 10,
      py::arg("workers") = 1);
  m.def(
      "connected_components", [](const B2srMatrix& a, unsigned workers) { return connected_components(a, exec_for(workers)); },
      py::arg("a"), py::arg("workers") = 1);
  m.def(
      "triangle_count",
      [](const CsrMatrix& a, int tile_dim, unsigned workers) {
        return triangle_count(a, to_tile(tile_dim), exec_for(workers)).count;
      },
      py::arg("csr"), py::arg("tile_dim") = 8, py::arg("workers") = 1);

  m.def(
      "cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "bitblas");
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line driver in-process; returns (exit_code, stdout, stderr).");
  m.def("schema_path", &cli::schema_path);
}
