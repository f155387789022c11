#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bitblas/algorithms.hpp"
#include "bitblas/csr_matrix.hpp"
#include "bitblas/matrix_market.hpp"
#include "bitblas/parallel.hpp"
#include "bitblas/report.hpp"
#include "bitblas/tile_dim.hpp"

namespace bitblas::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kIoError = 2,
  kInvariantError = 3,
  kCorrectnessFailure = 4,
};

/// Path of the JSON schema every report validates against.
std::string schema_path();

struct ConvertArgs {
  std::filesystem::path input;
  std::filesystem::path output;
  TileDim tile_dim = TileDim::k8;
  IngestOptions ingest;
  std::optional<std::filesystem::path> json;
};

struct ProfileArgs {
  std::filesystem::path input;
  /// Unset: min(64, nTileRows) tile-rows.
  std::optional<std::uint32_t> samples;
  /// Scan every 4-row tile-row (exact statistics).
  bool all_tile_rows = false;
  std::uint64_t seed = 0;
  IngestOptions ingest;
  std::optional<std::filesystem::path> json;
  Exec exec;
};

enum class BenchKernel { BmvBinBinBin, BmvBinBinFull, BmvBinFullFull, BmmSum };

struct BenchArgs {
  std::filesystem::path input;
  BenchKernel kernel = BenchKernel::BmvBinBinFull;
  TileDim tile_dim = TileDim::k8;
  std::uint32_t reps = 5;
  std::uint64_t seed = 0;
  IngestOptions ingest;
  std::optional<std::filesystem::path> json;
  Exec exec;
  /// Test seam: corrupt the B2SR output before the cross-check.
  bool inject_fault = false;
};

enum class Algo { Bfs, Sssp, PageRank, Components, Triangles };

struct RunArgs {
  Algo algo = Algo::Bfs;
  std::filesystem::path input;
  std::uint32_t src = 0;
  AlgoParams params;
  /// Unset: pick the width the sampling profile recommends.
  std::optional<TileDim> tile_dim;
  /// cc/tc symmetrize the input (and tc drops self-loops) unless disabled.
  bool clean = true;
  IngestOptions ingest;
  std::optional<std::filesystem::path> json;
  Exec exec;
  /// Number of result entries echoed to stdout.
  std::uint32_t head = 16;
};

struct InfoArgs {
  std::optional<std::filesystem::path> input;
  bool schema = false;
  std::optional<std::filesystem::path> json;
};

int cmd_convert(const ConvertArgs& args, std::ostream& out, std::ostream& err);
int cmd_profile(const ProfileArgs& args, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);
int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err);
int cmd_info(const InfoArgs& args, std::ostream& out, std::ostream& err);

/// Times one kernel against the CSR float baseline on identical inputs and
/// cross-checks the outputs.
BenchResult run_bench(const CsrMatrix& csr, BenchKernel kernel, TileDim tile_dim, std::uint32_t reps,
                      std::uint64_t seed, const Exec& exec, bool inject_fault = false);

std::string to_string(BenchKernel kernel);
BenchKernel bench_kernel_from_string(const std::string& name);
std::string to_string(Algo algo);
Algo algo_from_string(const std::string& name);

/// Profile-driven default tile width: min(64, nTileRows) samples, seed 0.
TileDim default_tile_dim(const CsrMatrix& csr, const Exec& exec = {});

/// Full command line (args[0] is the program name). Parses with CLI11 and
/// dispatches to the cmd_* functions.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bitblas::cli
