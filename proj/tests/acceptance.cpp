// Acceptance suite: one PASS/FAIL/SKIP line per criterion; exit status is
// non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "bitblas/algorithms.hpp"
#include "bitblas/b2sr_matrix.hpp"
#include "bitblas/cli.hpp"
#include "bitblas/kernels.hpp"
#include "bitblas/matrix_market.hpp"
#include "bitblas/oracle.hpp"
#include "bitblas/report.hpp"
#include "bitblas/sample_profile.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using namespace bitblas;
using oracle::DenseMatrix;
using testing::Rng;

namespace {

enum class Status { Pass, Fail, Skip };

struct Outcome {
  Status status = Status::Pass;
  std::string detail;
};

/// Collects the first failure of a criterion; later checks keep running cheaply.
struct Check {
  Outcome outcome;
  bool operator()(bool ok, const std::string& what) {
    if (!ok && outcome.status != Status::Fail) {
      outcome.status = Status::Fail;
      outcome.detail = what;
    }
    return ok;
  }
  bool failed() const { return outcome.status == Status::Fail; }
};

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string describe(std::uint32_t n, TileDim d, int trial) {
  return "trial " + std::to_string(trial) + " n=" + std::to_string(n) + " d=" + std::to_string(dim(d));
}

DenseVector bits_as_dense(const BitVector& v) {
  DenseVector d(v.n());
  for (std::uint32_t i = 0; i < v.n(); ++i) d[i] = v.test(i) ? 1.0 : 0.0;
  return d;
}

DenseVector apply_keep(DenseVector v, const BitVector& keep, double identity) {
  for (std::uint32_t i = 0; i < v.size(); ++i)
    if (!keep.test(i)) v[i] = identity;
  return v;
}

/// Out-degrees shifted so none is zero; the scale kernel divides by them.
std::vector<double> nonzero_scale(Rng& rng, std::uint32_t n) {
  std::vector<double> s(n);
  for (auto& v : s) v = static_cast<double>(testing::uniform_u32(rng, 1, 8));
  return s;
}

// 1 -------------------------------------------------------------------------

Outcome round_trip() {
  Check check;
  Rng rng(1001);
  for (int t = 0; t < 200 && !check.failed(); ++t) {
    const std::uint32_t n = testing::uniform_u32(rng, 1, 256);
    const double density = std::exp(testing::uniform_real(rng, std::log(0.001), std::log(0.5)));
    const CsrMatrix csr = testing::random_pattern(rng, n, density);
    for (TileDim d : kAllTileDims) {
      const CsrMatrix back = b2sr_to_csr(csr_to_b2sr(csr, d));
      check(back.same_pattern(csr), "pattern changed, " + describe(n, d, t));
    }
  }
  return check.outcome;
}

// 2 -------------------------------------------------------------------------

Outcome tile_saving() {
  Check check;
  for (TileDim d : kAllTileDims) {
    const std::uint32_t n = dim(d);
    const CsrMatrix dense = testing::dense_pattern(n);
    const B2srMatrix m = csr_to_b2sr(dense, d);
    const std::uint64_t value_bytes = 4ull * n * n;
    const std::uint64_t bit_bytes = m.bit_tiles().size();
    const std::uint64_t expected = d == TileDim::k4 ? 16 : 32;
    check(m.num_tiles() == 1 && bit_bytes == tile_bytes(d), "dense tile not stored as one tile at d=" + std::to_string(n));
    check(value_bytes == expected * bit_bytes,
          "saving at d=" + std::to_string(n) + " is " + std::to_string(value_bytes) + "/" + std::to_string(bit_bytes));
    check(storage_bytes(m) == 4ull * 2 + 4 + tile_bytes(d), "B2SR bytes formula at d=" + std::to_string(n));
    check(csr_storage_bytes(dense) == 4ull * (n + 1) + 8ull * n * n, "CSR bytes formula at d=" + std::to_string(n));
  }
  const CsrMatrix dense8 = testing::dense_pattern(8);
  const B2srMatrix m8 = csr_to_b2sr(dense8, TileDim::k8);
  check(storage_bytes(m8) == 20 && csr_storage_bytes(dense8) == 548, "dense 8x8 is not 20/548 bytes");
  check(compression_ratio(m8, dense8) == 20.0 / 548.0, "dense 8x8 ratio differs from 20/548");
  return check.outcome;
}

// 3 -------------------------------------------------------------------------

struct PaperFigure {
  TileDim d;
  double kib;
};
constexpr PaperFigure kMycielskianFigures[] = {
    {TileDim::k4, 675.70}, {TileDim::k8, 361.46}, {TileDim::k16, 358.89}, {TileDim::k32, 429.89}};
constexpr double kMycielskianCsrMib = 3.12;

/// Runs the convert command at every width and compares sizes against the
/// published figures (KB = 1024 bytes).
Outcome check_storage_figures(const fs::path& mtx, const fs::path& work, std::string* summary) {
  Check check;
  double bytes[4] = {};
  double csr_bytes = 0;
  for (int k = 0; k < 4; ++k) {
    cli::ConvertArgs args;
    args.input = mtx;
    args.output = work / ("m" + std::to_string(dim(kMycielskianFigures[k].d)) + ".b2sr");
    args.tile_dim = kMycielskianFigures[k].d;
    args.json = work / "convert.json";
    std::ostringstream out, err;
    const int code = cli::cmd_convert(args, out, err);
    if (!check(code == 0, "convert exited " + std::to_string(code) + ": " + err.str())) return check.outcome;
    std::ifstream in(*args.json);
    const Json report = Json::parse(in);
    bytes[k] = report["payload"]["b2srBytes"].get<double>();
    csr_bytes = report["payload"]["csrBytes"].get<double>();
    const double kib = bytes[k] / 1024.0;
    const double want = kMycielskianFigures[k].kib;
    std::ostringstream s;
    s << "B2SR-" << dim(kMycielskianFigures[k].d) << " " << kib << " KB vs " << want;
    check(std::abs(kib - want) <= 0.05 * want, s.str());
    *summary += (k == 0 ? "" : ", ") + s.str().substr(5);
  }
  const double mib = csr_bytes / (1024.0 * 1024.0);
  check(std::abs(mib - kMycielskianCsrMib) <= 0.05 * kMycielskianCsrMib,
        "CSR " + std::to_string(mib) + " MB vs 3.12");
  // B2SR-16 < B2SR-8 < B2SR-32 < B2SR-4
  check(bytes[2] < bytes[1] && bytes[1] < bytes[3] && bytes[3] < bytes[0], "size ordering differs from 16<8<32<4");
  *summary += "; CSR " + std::to_string(mib).substr(0, 5) + " MB";
  return check.outcome;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("bitblas_acceptance_" + name);
  fs::create_directories(p);
  return p;
}

std::optional<fs::path> find_mycielskian_file() {
  if (const char* env = std::getenv("BITBLAS_MYCIELSKIAN12")) {
    if (fs::exists(env)) return fs::path(env);
  }
  for (const fs::path& p : {fs::path(BITBLAS_DATA_DIR) / "mycielskian12.mtx",
                            fs::path(BITBLAS_DATA_DIR) / "mycielskian12" / "mycielskian12.mtx"})
    if (fs::exists(p)) return p;
  return std::nullopt;
}

Outcome paper_figure_downloaded() {
  const auto file = find_mycielskian_file();
  if (!file) return {Status::Skip, "mycielskian12.mtx not found (set BITBLAS_MYCIELSKIAN12 or place it in data/)"};
  const fs::path work = scratch_dir("suitesparse");
  std::string summary;
  Outcome o = check_storage_figures(*file, work, &summary);
  fs::remove_all(work);
  if (o.status == Status::Pass) o.detail = summary;
  return o;
}

/// Same check on a locally generated Mycielski graph M12 (3071 vertices), written
/// in SuiteSparse layout: symmetric pattern, lower triangle stored.
Outcome paper_figure_generated() {
  Check check;
  const CsrMatrix g = testing::mycielskian(12);
  if (!check(g.n() == 3071 && g.nnz() == 407200,
             "generated graph has n=" + std::to_string(g.n()) + " nnz=" + std::to_string(g.nnz())))
    return check.outcome;
  const fs::path work = scratch_dir("generated");
  const fs::path mtx = work / "mycielskian12.mtx";
  {
    const CsrMatrix lower = lower_triangle(g);
    std::ofstream out(mtx);
    out << "%%MatrixMarket matrix coordinate pattern symmetric\n"
        << g.n() << ' ' << g.n() << ' ' << lower.nnz() << '\n';
    for (std::uint32_t i = 0; i < lower.n(); ++i)
      for (std::uint32_t j : lower.row(i)) out << i + 1 << ' ' << j + 1 << '\n';
  }
  std::string summary;
  Outcome o = check_storage_figures(mtx, work, &summary);
  fs::remove_all(work);
  if (o.status == Status::Pass) o.detail = summary;
  return o;
}

// 4 -------------------------------------------------------------------------

Outcome kernel_oracles() {
  Check check;
  Rng rng(1004);
  const Semiring full_semirings[] = {Semiring::arithmetic(), Semiring::min_plus(1), Semiring::min_plus(0),
                                     Semiring::max_times()};
  for (int t = 0; t < 100 && !check.failed(); ++t) {
    const std::uint32_t n = testing::uniform_u32(rng, 1, 256);
    const double density = std::exp(testing::uniform_real(rng, std::log(0.002), std::log(0.3)));
    const CsrMatrix ca = testing::random_pattern(rng, n, density);
    const CsrMatrix cb = testing::random_pattern(rng, n, density);
    const CsrMatrix cm = testing::random_pattern(rng, n, 0.2);
    const DenseMatrix da = DenseMatrix::from_csr(ca), db = DenseMatrix::from_csr(cb), dm = DenseMatrix::from_csr(cm);
    const BitVector xb = testing::random_bits(rng, n);
    const BitVector keep = testing::random_bits(rng, n);
    const DenseVector xf = testing::random_dense(rng, n);
    const std::vector<double> scale = nonzero_scale(rng, n);

    const DenseVector o_bbb = oracle::dense_semiring_mxv(da, bits_as_dense(xb), Semiring::boolean());
    const DenseVector o_bbf = oracle::dense_semiring_mxv(da, bits_as_dense(xb), Semiring::arithmetic());
    std::vector<DenseVector> o_bff;
    for (const Semiring& s : full_semirings) o_bff.push_back(oracle::dense_semiring_mxv(da, xf, s));
    const DenseVector o_scaled = oracle::dense_semiring_mxv(da, xf, Semiring::arithmetic(), scale);
    const std::uint64_t o_sum = oracle::dense_mxm_masked_sum(da, db);
    const std::uint64_t o_masked = oracle::dense_mxm_masked_sum(da, db, &dm);

    for (TileDim d : kAllTileDims) {
      const std::string at = describe(n, d, t);
      const B2srMatrix a = csr_to_b2sr(ca, d), b = csr_to_b2sr(cb, d), m = csr_to_b2sr(cm, d);
      check(bits_as_dense(bmv_bin_bin_bin(a, xb)) == o_bbb, "bmv_bin_bin_bin " + at);
      check(bits_as_dense(bmv_bin_bin_bin_masked(a, xb, keep)) == apply_keep(o_bbb, keep, 0.0),
            "bmv_bin_bin_bin_masked " + at);
      check(bitwise_equal(bmv_bin_bin_full(a, xb), o_bbf), "bmv_bin_bin_full " + at);
      check(bitwise_equal(bmv_bin_bin_full_masked(a, xb, keep), apply_keep(o_bbf, keep, 0.0)),
            "bmv_bin_bin_full_masked " + at);
      for (std::size_t s = 0; s < std::size(full_semirings); ++s) {
        const Semiring& sr = full_semirings[s];
        check(bitwise_equal(bmv_bin_full_full(a, xf, sr), o_bff[s]), "bmv_bin_full_full " + sr.name() + " " + at);
        check(bitwise_equal(bmv_bin_full_full_masked(a, xf, sr, keep), apply_keep(o_bff[s], keep, sr.identity())),
              "bmv_bin_full_full_masked " + sr.name() + " " + at);
      }
      check(bitwise_equal(bmv_bin_full_full(a, xf, Semiring::arithmetic(), scale), o_scaled),
            "bmv_bin_full_full scaled " + at);
      check(bitwise_equal(bmv_bin_full_full_masked(a, xf, Semiring::arithmetic(), keep, scale),
                          apply_keep(o_scaled, keep, 0.0)),
            "bmv_bin_full_full_masked scaled " + at);
      check(bmm_bin_bin_sum(a, b) == o_sum, "bmm_bin_bin_sum " + at);
      check(bmm_bin_bin_sum_masked(a, b, m) == o_masked, "bmm_bin_bin_sum_masked " + at);
    }
  }
  return check.outcome;
}

// 5 -------------------------------------------------------------------------

/// Every kernel and algorithm output for one matrix at one width, serialized.
std::string fingerprint(const CsrMatrix& dg, const CsrMatrix& ug, TileDim d, const BitVector& xb,
                        const BitVector& keep, const DenseVector& xf, std::uint32_t src, const Exec& exec) {
  std::ostringstream s;
  s.precision(17);
  auto put = [&](const DenseVector& v) {
    for (double x : v) s << x << ',';
    s << '|';
  };
  const B2srMatrix a = csr_to_b2sr(dg, d, exec);
  const B2srMatrix u = csr_to_b2sr(ug, d, exec);
  put(bits_as_dense(bmv_bin_bin_bin(a, xb, exec)));
  put(bits_as_dense(bmv_bin_bin_bin_masked(a, xb, keep, exec)));
  put(bmv_bin_bin_full(a, xb, exec));
  put(bmv_bin_bin_full_masked(a, xb, keep, exec));
  for (const Semiring& sr : {Semiring::arithmetic(), Semiring::min_plus(1), Semiring::min_plus(0), Semiring::max_times()}) {
    put(bmv_bin_full_full(a, xf, sr, {}, exec));
    put(bmv_bin_full_full_masked(a, xf, sr, keep, {}, exec));
  }
  s << bmm_bin_bin_sum(a, b2sr_transpose(a), exec) << '|' << bmm_bin_bin_sum_masked(a, a, a, exec) << '|';
  put(bfs(a, src, Traversal::OutEdges, exec).per_vertex);
  put(sssp(a, src, Traversal::OutEdges, exec).per_vertex);
  put(pagerank_from_adjacency(a, {}, exec).per_vertex);
  put(connected_components(u, exec).per_vertex);
  s << triangle_count(ug, d, exec).count;
  return s.str();
}

Outcome tile_width_invariance() {
  Check check;
  Rng rng(1005);
  for (int t = 0; t < 50 && !check.failed(); ++t) {
    const std::uint32_t n = testing::uniform_u32(rng, 1, 200);
    const CsrMatrix dg = testing::random_digraph(rng, n, testing::uniform_real(rng, 0.005, 0.1));
    const CsrMatrix ug = testing::random_graph(rng, n, testing::uniform_real(rng, 0.005, 0.1));
    const BitVector xb = testing::random_bits(rng, n), keep = testing::random_bits(rng, n);
    const DenseVector xf = testing::random_dense(rng, n);
    const std::uint32_t src = testing::uniform_u32(rng, 0, n - 1);
    const std::string base = fingerprint(dg, ug, TileDim::k4, xb, keep, xf, src, {});
    for (TileDim d : {TileDim::k8, TileDim::k16, TileDim::k32})
      check(fingerprint(dg, ug, d, xb, keep, xf, src, {}) == base, "outputs differ from B2SR-4, " + describe(n, d, t));
  }
  return check.outcome;
}

// 6 -------------------------------------------------------------------------

Outcome algorithm_oracles() {
  Check check;
  Rng rng(1006);
  for (int t = 0; t < 100 && !check.failed(); ++t) {
    const std::uint32_t n = testing::uniform_u32(rng, 1, 200);
    const CsrMatrix dg = testing::random_digraph(rng, n, std::exp(testing::uniform_real(rng, std::log(0.002), std::log(0.1))));
    const CsrMatrix ug = testing::random_graph(rng, n, std::exp(testing::uniform_real(rng, std::log(0.002), std::log(0.15))));
    const std::uint32_t src = testing::uniform_u32(rng, 0, n - 1);
    const DenseVector levels = oracle::oracle_bfs(dg, src);
    const DenseVector dist = oracle::oracle_bellman_ford(dg, src);
    const DenseVector labels = oracle::oracle_cc_union_find(ug);
    const std::uint64_t triangles = oracle::oracle_triangle_count(ug);
    const TileDim d = kAllTileDims[t % 4];
    const std::string at = describe(n, d, t);
    const B2srMatrix a = csr_to_b2sr(dg, d);

    const DenseVector b = bfs(a, src).per_vertex;
    const DenseVector s = sssp(a, src).per_vertex;
    check(b == levels, "bfs " + at);
    check(s == dist, "sssp " + at);
    check(s == b, "sssp differs from bfs " + at);

    const AlgoResult pr = pagerank_from_adjacency(a, AlgoParams{0.85, 1e-9, 10});
    const DenseVector ref = oracle::oracle_pagerank(dg, 0.85, pr.iterations);
    double worst = 0;
    for (std::uint32_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(pr.per_vertex[i] - ref[i]));
    check(pr.iterations >= 1 && pr.iterations <= 10 && worst <= 1e-12, "pagerank off by " + std::to_string(worst) + " " + at);
    check(std::accumulate(pr.per_vertex.begin(), pr.per_vertex.end(), 0.0) <= 1.0 + 1e-9, "pagerank mass > 1 " + at);

    const DenseVector cc = connected_components(csr_to_b2sr(ug, d)).per_vertex;
    check(cc == labels, "connected components " + at);
    for (std::uint32_t i = 0; i < n; ++i) check(cc[i] <= i && cc[static_cast<std::uint32_t>(cc[i])] == cc[i], "cc label not min id " + at);

    check(triangle_count(ug, d).count == triangles, "triangle count " + at);
  }
  for (std::uint32_t n = 3; n <= 8; ++n) {
    const std::uint64_t want = std::uint64_t{n} * (n - 1) * (n - 2) / 6;
    for (TileDim d : kAllTileDims)
      check(triangle_count(testing::complete_graph(n), d).count == want, "TC(K" + std::to_string(n) + ")");
  }
  return check.outcome;
}

// 7 -------------------------------------------------------------------------

Outcome sampling_exactness() {
  Check check;
  Rng rng(1007);
  for (int t = 0; t < 20 && !check.failed(); ++t) {
    const std::uint32_t n = testing::uniform_u32(rng, 1, 256);
    const CsrMatrix csr = testing::random_pattern(rng, n, testing::uniform_real(rng, 0.001, 0.3));
    const SampleProfileReport r = sample_profile(csr, tile_rows_for(n, TileDim::k4), 42);
    for (TileDim d : kAllTileDims) {
      const B2srMatrix m = csr_to_b2sr(csr, d);
      const TileDimEstimate& e = r.at(d);
      check(e.est_tile_count == static_cast<double>(m.num_tiles()), "estTileCount " + describe(n, d, t));
      check(e.est_bytes == static_cast<double>(storage_bytes(m)), "estBytes " + describe(n, d, t));
      check(e.est_compression_ratio == compression_ratio(m, csr), "estCompressionRatio " + describe(n, d, t));
    }
    const std::uint32_t partial = std::max<std::uint32_t>(1, tile_rows_for(n, TileDim::k4) / 3);
    const std::uint64_t seed = rng();
    check(dump_report(to_json(sample_profile(csr, partial, seed))) ==
              dump_report(to_json(sample_profile(csr, partial, seed, Exec{4}))),
          "profile JSON differs between runs, trial " + std::to_string(t));
  }
  return check.outcome;
}

// 8 -------------------------------------------------------------------------

Outcome mask_law() {
  Check check;
  Rng rng(1008);
  for (int t = 0; t < 100 && !check.failed(); ++t) {
    const std::uint32_t n = testing::uniform_u32(rng, 1, 256);
    const TileDim d = kAllTileDims[t % 4];
    const B2srMatrix a = csr_to_b2sr(testing::random_pattern(rng, n, testing::uniform_real(rng, 0.005, 0.2)), d);
    const BitVector xb = testing::random_bits(rng, n);
    const DenseVector xf = testing::random_dense(rng, n);
    const BitVector keep = testing::random_bits(rng, n, testing::uniform_real(rng, 0.0, 1.0));
    const std::string at = describe(n, d, t);

    const BitVector bbb = bmv_bin_bin_bin(a, xb), bbb_m = bmv_bin_bin_bin_masked(a, xb, keep);
    const DenseVector bbf = bmv_bin_bin_full(a, xb), bbf_m = bmv_bin_bin_full_masked(a, xb, keep);
    for (std::uint32_t i = 0; i < n; ++i) {
      check(bbb_m.test(i) == (keep.test(i) && bbb.test(i)), "bin_bin_bin mask " + at);
      check(bbf_m[i] == (keep.test(i) ? bbf[i] : 0.0), "bin_bin_full mask " + at);
    }
    for (const Semiring& s : {Semiring::arithmetic(), Semiring::min_plus(1), Semiring::min_plus(0), Semiring::max_times()}) {
      const DenseVector u = bmv_bin_full_full(a, xf, s), m = bmv_bin_full_full_masked(a, xf, s, keep);
      for (std::uint32_t i = 0; i < n; ++i)
        check(m[i] == (keep.test(i) ? u[i] : s.identity()), "bin_full_full mask " + s.name() + " " + at);
    }
  }
  return check.outcome;
}

// 9 -------------------------------------------------------------------------

std::string bytes_of(const DenseVector& v) {
  return std::string(reinterpret_cast<const char*>(v.values.data()), v.values.size() * sizeof(double));
}
std::string bytes_of(const BitVector& v) { return std::string(v.bytes().begin(), v.bytes().end()); }

Outcome parallel_determinism() {
  Check check;
  Rng rng(1009);
  for (int t = 0; t < 20 && !check.failed(); ++t) {
    const std::uint32_t n = testing::uniform_u32(rng, 1, 256);
    const CsrMatrix csr = testing::random_pattern(rng, n, testing::uniform_real(rng, 0.005, 0.2));
    const BitVector xb = testing::random_bits(rng, n), keep = testing::random_bits(rng, n);
    const DenseVector xf = testing::random_dense(rng, n);
    const std::vector<double> scale = nonzero_scale(rng, n);
    for (TileDim d : kAllTileDims) {
      std::string reference;
      for (unsigned workers : {1u, 2u, 8u}) {
        const Exec e{workers};
        const B2srMatrix a = csr_to_b2sr(csr, d, e);
        std::string out;
        out += bytes_of(bmv_bin_bin_bin(a, xb, e));
        out += bytes_of(bmv_bin_bin_bin_masked(a, xb, keep, e));
        out += bytes_of(bmv_bin_bin_full(a, xb, e));
        out += bytes_of(bmv_bin_bin_full_masked(a, xb, keep, e));
        for (const Semiring& s : {Semiring::arithmetic(), Semiring::min_plus(1), Semiring::min_plus(0), Semiring::max_times()}) {
          out += bytes_of(bmv_bin_full_full(a, xf, s, {}, e));
          out += bytes_of(bmv_bin_full_full_masked(a, xf, s, keep, {}, e));
        }
        out += bytes_of(bmv_bin_full_full(a, xf, Semiring::arithmetic(), scale, e));
        out += std::to_string(bmm_bin_bin_sum(a, a, e)) + "|" + std::to_string(bmm_bin_bin_sum_masked(a, a, a, e));
        out += std::string(a.bit_tiles().begin(), a.bit_tiles().end());
        if (workers == 1) reference = std::move(out);
        else check(out == reference, "output differs at " + std::to_string(workers) + " workers, " + describe(n, d, t));
      }
    }
  }
  return check.outcome;
}

// 10 ------------------------------------------------------------------------

Outcome bench_gate() {
  Check check;
  Rng rng(1010);
  const fs::path work = scratch_dir("bench");
  const cli::BenchKernel kernels[] = {cli::BenchKernel::BmvBinBinBin, cli::BenchKernel::BmvBinBinFull,
                                      cli::BenchKernel::BmvBinFullFull, cli::BenchKernel::BmmSum};
  for (int f = 0; f < 10 && !check.failed(); ++f) {
    const std::uint32_t n = testing::uniform_u32(rng, 16, 256);
    const fs::path mtx = work / ("fixture" + std::to_string(f) + ".mtx");
    write_matrix_market_file(testing::random_pattern(rng, n, testing::uniform_real(rng, 0.005, 0.2)), mtx);
    for (cli::BenchKernel k : kernels) {
      cli::BenchArgs args;
      args.input = mtx;
      args.kernel = k;
      args.tile_dim = kAllTileDims[f % 4];
      args.seed = static_cast<std::uint64_t>(f);
      args.json = work / "bench.json";
      std::ostringstream out, err;
      const std::string at = "fixture " + std::to_string(f) + " " + cli::to_string(k);
      if (!check(cli::cmd_bench(args, out, err) == 0, "bench exited non-zero, " + at + ": " + err.str())) break;
      std::ifstream in(*args.json);
      const Json p = Json::parse(in)["payload"];
      check(p["outputsMatch"].get<bool>(), "outputsMatch=false, " + at);
      check(p["reps"] == 5 && p["timesNsB2sr"].size() == 5 && p["timesNsCsr"].size() == 5, "reps not 5, " + at);
      const double ratio = p["ratio"].get<double>();
      check(std::isfinite(ratio) && ratio > 0, "ratio malformed, " + at);
    }
  }
  fs::remove_all(work);
  return check.outcome;
}

struct Criterion {
  const char* id;
  const char* name;
  double time_limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const Criterion criteria[] = {
      {"1", "format round-trip (200 matrices x 4 widths)", 30, round_trip},
      {"2", "per-tile saving arithmetic", 0, tile_saving},
      {"3a", "mycielskian12 storage figures (SuiteSparse file)", 0, paper_figure_downloaded},
      {"3b", "mycielskian12 storage figures (generated M12)", 0, paper_figure_generated},
      {"4", "kernel oracle equivalence (100 x 4 widths)", 120, kernel_oracles},
      {"5", "tile-width invariance (50 matrices)", 0, tile_width_invariance},
      {"6", "algorithm oracles (100 graphs)", 0, algorithm_oracles},
      {"7", "sampling exactness and determinism (20 matrices)", 0, sampling_exactness},
      {"8", "mask-at-store law (100 triples)", 0, mask_law},
      {"9", "determinism at 1/2/8 workers (20 fixtures)", 0, parallel_determinism},
      {"10", "bench correctness gate (10 fixtures)", 0, bench_gate},
  };
  const char* only = argc > 1 ? argv[1] : nullptr;
  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only != nullptr && std::strcmp(only, c.id) != 0) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {Status::Fail, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.status == Status::Pass && c.time_limit_s > 0 && secs > c.time_limit_s) {
      o.status = Status::Fail;
      o.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s";
    }
    const char* tag = o.status == Status::Pass ? "PASS" : o.status == Status::Skip ? "SKIP" : "FAIL";
    if (o.status == Status::Fail) ++failures;
    std::printf("[%s] criterion %-3s %s (%.2f s)%s%s\n", tag, c.id, c.name, secs, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
