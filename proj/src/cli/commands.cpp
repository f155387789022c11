#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include "bitblas/b2sr_matrix.hpp"
#include "bitblas/cli.hpp"
#include "bitblas/container.hpp"
#include "bitblas/error.hpp"
#include "bitblas/sample_profile.hpp"

#ifndef BITBLAS_SCHEMA_PATH
#define BITBLAS_SCHEMA_PATH "schemas/report.schema.json"
#endif

namespace bitblas::cli {

namespace {

int fail(std::ostream& err, int code, const std::string& what) {
  err << "error: " << what << '\n';
  return code;
}

// Runs a command body, mapping library exceptions onto exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(err, kParseError, e.what());
  } catch (const ParameterError& e) {
    return fail(err, kParseError, e.what());
  } catch (const IoError& e) {
    return fail(err, kIoError, e.what());
  } catch (const std::exception& e) {
    return fail(err, kInvariantError, e.what());
  }
}

void emit(const Json& report, const std::optional<std::filesystem::path>& path, std::ostream& out) {
  if (!path) return;
  if (path->string() == "-") {
    out << dump_report(report);
    return;
  }
  write_report(report, *path);
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string format_value(double v) {
  if (v == std::numeric_limits<double>::infinity()) return "inf";
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

void print_estimates(const SampleProfileReport& report, std::ostream& out) {
  out << "tileDim  tileRows  sampled    estTiles      estBytes  estRatio  occupancy\n";
  for (const auto& e : report.per_tile_dim) {
    out << std::setw(7) << dim(e.tile_dim) << std::setw(10) << e.n_tile_rows << std::setw(9) << e.sampled_tile_rows
        << std::setw(12) << fixed(e.est_tile_count, 1) << std::setw(14) << fixed(e.est_bytes, 1) << std::setw(10)
        << fixed(e.est_compression_ratio, 4) << std::setw(11) << fixed(e.avg_nnz_occupancy, 4) << '\n';
  }
}

}  // namespace

std::string schema_path() { return BITBLAS_SCHEMA_PATH; }

std::string to_string(Algo algo) {
  switch (algo) {
    case Algo::Bfs:
      return "bfs";
    case Algo::Sssp:
      return "sssp";
    case Algo::PageRank:
      return "pr";
    case Algo::Components:
      return "cc";
    case Algo::Triangles:
      return "tc";
  }
  return "unknown";
}

Algo algo_from_string(const std::string& name) {
  for (auto a : {Algo::Bfs, Algo::Sssp, Algo::PageRank, Algo::Components, Algo::Triangles})
    if (to_string(a) == name) return a;
  throw ParameterError("unknown algorithm '" + name + "' (expected bfs, sssp, pr, cc or tc)");
}

TileDim default_tile_dim(const CsrMatrix& csr, const Exec& exec) {
  const std::uint32_t available = tile_rows_for(csr.n(), TileDim::k4);
  if (available == 0) throw EmptyMatrixError("cannot profile an empty (n = 0) matrix");
  return sample_profile(csr, std::min<std::uint32_t>(64, available), 0, exec).recommended();
}

int cmd_convert(const ConvertArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const IngestResult ingest = ingest_matrix_market_file(args.input, args.ingest);
    const CsrMatrix& csr = ingest.matrix;
    const B2srMatrix m = csr_to_b2sr(csr, args.tile_dim);
    save_b2sr(m, args.output);
    const std::uint64_t csr_bytes = csr_storage_bytes(csr);
    const std::uint64_t b2sr_bytes = storage_bytes(m);
    const double ratio = compression_ratio(m, csr);
    out << "input: " << args.input.string() << " (n=" << csr.n() << ", nnz=" << csr.nnz()
        << ", file entries=" << ingest.file_entries << ")\n";
    out << "CSR bytes: " << csr_bytes << " (" << fixed(csr_bytes / 1024.0, 2) << " KB)\n";
    out << "B2SR-" << dim(args.tile_dim) << " bytes: " << b2sr_bytes << " (" << fixed(b2sr_bytes / 1024.0, 2)
        << " KB, " << m.num_tiles() << " tiles)\n";
    out << "compression ratio: " << fixed(ratio, 6) << '\n';
    out << "wrote " << args.output.string() << '\n';

    Json payload;
    payload["input"] = args.input.string();
    payload["output"] = args.output.string();
    payload["n"] = csr.n();
    payload["nnz"] = csr.nnz();
    payload["fileEntries"] = ingest.file_entries;
    payload["tileDim"] = dim(args.tile_dim);
    payload["numTiles"] = m.num_tiles();
    payload["csrBytes"] = csr_bytes;
    payload["b2srBytes"] = b2sr_bytes;
    payload["compressionRatio"] = ratio;
    emit(make_report("convert", std::move(payload)), args.json, out);
    return static_cast<int>(kOk);
  });
}

int cmd_profile(const ProfileArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CsrMatrix csr = read_matrix_market(args.input, args.ingest);
    const std::uint32_t available = tile_rows_for(csr.n(), TileDim::k4);
    std::uint32_t samples = args.samples.value_or(std::min<std::uint32_t>(64, available));
    if (args.all_tile_rows) samples = available;
    const SampleProfileReport report = sample_profile(csr, samples, args.seed, args.exec);
    out << "input: " << args.input.string() << " (n=" << csr.n() << ", nnz=" << csr.nnz()
        << ", CSR bytes=" << report.csr_bytes << ")\n";
    out << "sampled " << samples << " of " << available << " tile-rows (seed " << args.seed << ")\n";
    print_estimates(report, out);
    out << "recommended tileDim: " << dim(report.recommended()) << '\n';
    emit(to_json(report), args.json, out);
    return static_cast<int>(kOk);
  });
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CsrMatrix csr = read_matrix_market(args.input, args.ingest);
    const BenchResult r = run_bench(csr, args.kernel, args.tile_dim, args.reps, args.seed, args.exec,
                                    args.inject_fault);
    out << "kernel " << r.kernel << " B2SR-" << dim(r.tile_dim) << ", " << r.reps << " reps\n";
    out << "mean B2SR ns: " << fixed(r.mean_ns_b2sr, 0) << "\nmean CSR ns:  " << fixed(r.mean_ns_csr, 0)
        << "\nratio (CSR/B2SR): " << fixed(r.ratio, 3) << "\noutputs match: " << (r.outputs_match ? "yes" : "NO")
        << '\n';
    emit(to_json(r), args.json, out);
    if (!r.outputs_match) return fail(err, kCorrectnessFailure, "B2SR kernel output differs from the CSR baseline");
    return static_cast<int>(kOk);
  });
}

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    IngestOptions ingest = args.ingest;
    if (args.clean && (args.algo == Algo::Components || args.algo == Algo::Triangles)) {
      ingest.symmetrize = Symmetrize::Union;
      if (args.algo == Algo::Triangles) ingest.drop_self_loops = true;
    }
    const CsrMatrix csr = read_matrix_market(args.input, ingest);
    const TileDim td = args.tile_dim ? *args.tile_dim : default_tile_dim(csr, args.exec);

    AlgoResult result;
    if (args.algo == Algo::Triangles) {
      result = triangle_count(csr, td, args.exec);
    } else {
      const B2srMatrix a = csr_to_b2sr(csr, td, args.exec);
      switch (args.algo) {
        case Algo::Bfs:
          result = bfs(a, args.src, Traversal::OutEdges, args.exec);
          break;
        case Algo::Sssp:
          result = sssp(a, args.src, Traversal::OutEdges, args.exec);
          break;
        case Algo::PageRank:
          result = pagerank_from_adjacency(a, args.params, args.exec);
          break;
        default:
          result = connected_components(a, args.exec);
          break;
      }
    }

    out << to_string(args.algo) << " on " << args.input.string() << " (n=" << csr.n() << ", nnz=" << csr.nnz()
        << ", B2SR-" << dim(td) << ")\n";
    out << "iterations: " << result.iterations << "\nconverged: " << (result.converged ? "yes" : "no") << '\n';
    if (args.algo == Algo::Triangles) {
      out << "triangles: " << result.count << '\n';
    } else {
      const std::size_t shown = std::min<std::size_t>(args.head, result.per_vertex.size());
      out << "result:";
      for (std::size_t i = 0; i < shown; ++i) out << ' ' << format_value(result.per_vertex[i]);
      if (shown < result.per_vertex.size()) out << " ...";
      out << '\n';
    }
    Json report = to_json(result, to_string(args.algo));
    report["payload"]["tileDim"] = dim(td);
    emit(report, args.json, out);
    return static_cast<int>(kOk);
  });
}

int cmd_info(const InfoArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (args.schema) {
      out << schema_path() << '\n';
      if (!args.input) return static_cast<int>(kOk);
    }
    if (!args.input) return fail(err, kParseError, "info needs an input file or --schema");
    Json payload;
    payload["input"] = args.input->string();
    if (args.input->extension() == ".b2sr") {
      const B2srMatrix m = load_b2sr(*args.input);
      out << "B2SR container " << args.input->string() << "\n  n: " << m.n() << "\n  tileDim: " << m.dim()
          << "\n  tileRows: " << m.n_tile_rows() << "\n  tiles: " << m.num_tiles() << "\n  nnz: " << m.popcount()
          << "\n  bytes: " << storage_bytes(m) << '\n';
      payload["format"] = "b2sr";
      payload["n"] = m.n();
      payload["nnz"] = m.popcount();
      payload["tileDim"] = m.dim();
      payload["numTiles"] = m.num_tiles();
      payload["b2srBytes"] = storage_bytes(m);
    } else {
      const IngestResult ingest = ingest_matrix_market_file(*args.input);
      const CsrMatrix& csr = ingest.matrix;
      out << "Matrix Market " << args.input->string() << " (" << ingest.field << ' ' << ingest.symmetry << ")\n"
          << "  n: " << csr.n() << "\n  file entries: " << ingest.file_entries << "\n  nnz: " << csr.nnz()
          << "\n  density: " << format_value(nonzero_density(csr))
          << "\n  symmetric: " << (csr.is_symmetric() ? "yes" : "no")
          << "\n  self-loops: " << (csr.has_self_loops() ? "yes" : "no") << "\n  CSR bytes: " << csr_storage_bytes(csr)
          << '\n';
      payload["format"] = "matrix-market";
      payload["n"] = csr.n();
      payload["nnz"] = csr.nnz();
      payload["fileEntries"] = ingest.file_entries;
      payload["nonzeroDensity"] = nonzero_density(csr);
      payload["csrBytes"] = csr_storage_bytes(csr);
      if (csr.n() > 0) {
        Json sizes = Json::object();
        for (TileDim d : kAllTileDims) {
          const B2srMatrix m = csr_to_b2sr(csr, d);
          out << "  B2SR-" << dim(d) << " bytes: " << storage_bytes(m) << " (ratio "
              << fixed(compression_ratio(m, csr), 4) << ")\n";
          sizes[to_string(d)] = storage_bytes(m);
        }
        payload["b2srBytes"] = std::move(sizes);
      }
    }
    emit(make_report("info", std::move(payload)), args.json, out);
    return static_cast<int>(kOk);
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bit-block compressed sparse row (B2SR) toolkit", "bitblas"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Kernel worker count (BITBLAS_THREADS overrides)")->check(CLI::PositiveNumber);

  IngestOptions ingest;
  bool symmetrize = false;
  auto add_ingest = [&](CLI::App* sub) {
    sub->add_flag("--symmetrize", symmetrize, "Add the transpose of every entry");
    sub->add_flag("--drop-self-loops", ingest.drop_self_loops, "Remove diagonal entries");
    sub->add_flag("--drop-zeros", ingest.drop_explicit_zeros, "Remove entries stored as 0");
  };
  int tile = 8;
  std::string json_path;
  auto add_tile = [&](CLI::App* sub) {
    sub->add_option("-t,--tile-dim", tile, "Tile width")->check(CLI::IsMember({4, 8, 16, 32}));
  };
  auto add_json = [&](CLI::App* sub) { sub->add_option("--json", json_path, "Write the JSON report here ('-' = stdout)"); };

  ConvertArgs convert;
  auto* c_convert = app.add_subcommand("convert", "Convert a Matrix Market file to a B2SR container");
  c_convert->add_option("input", convert.input, "Matrix Market file")->required();
  c_convert->add_option("output", convert.output, "Output .b2sr file")->required();
  add_tile(c_convert);
  add_ingest(c_convert);
  add_json(c_convert);

  ProfileArgs profile;
  std::uint32_t samples = 0;
  auto* c_profile = app.add_subcommand("profile", "Estimate B2SR storage per tile width by sampling");
  c_profile->add_option("input", profile.input, "Matrix Market file")->required();
  auto* samples_opt = c_profile->add_option("-s,--samples", samples, "Tile-rows to sample (4-row units)");
  c_profile->add_flag("--all", profile.all_tile_rows, "Scan every tile-row");
  c_profile->add_option("--seed", profile.seed, "Sampling seed");
  add_ingest(c_profile);
  add_json(c_profile);

  BenchArgs bench;
  std::string kernel = "bmv-bbf";
  auto* c_bench = app.add_subcommand("bench", "Time a B2SR kernel against the CSR float baseline");
  c_bench->add_option("input", bench.input, "Matrix Market file")->required();
  c_bench->add_option("-k,--kernel", kernel, "bmv-bbb | bmv-bbf | bmv-bff | bmm-sum")
      ->check(CLI::IsMember({"bmv-bbb", "bmv-bbf", "bmv-bff", "bmm-sum"}));
  c_bench->add_option("-r,--reps", bench.reps, "Repetitions")->check(CLI::PositiveNumber);
  c_bench->add_option("--seed", bench.seed, "Input vector seed");
  add_tile(c_bench);
  add_ingest(c_bench);
  add_json(c_bench);

  RunArgs run_args;
  std::string algo;
  bool no_clean = false;
  auto* c_run = app.add_subcommand("run", "Run a graph algorithm");
  c_run->add_option("algo", algo, "bfs | sssp | pr | cc | tc")
      ->required()
      ->check(CLI::IsMember({"bfs", "sssp", "pr", "cc", "tc"}));
  c_run->add_option("input", run_args.input, "Matrix Market file")->required();
  c_run->add_option("--src", run_args.src, "Source vertex (0-based) for bfs/sssp");
  c_run->add_option("--alpha", run_args.params.alpha, "PageRank damping factor");
  c_run->add_option("--epsilon", run_args.params.epsilon, "PageRank L1 convergence threshold");
  c_run->add_option("--max-iter", run_args.params.max_iter, "PageRank iteration cap");
  auto* run_tile = c_run->add_option("-t,--tile-dim", tile, "Tile width (default: profile-recommended)")
                       ->check(CLI::IsMember({4, 8, 16, 32}));
  c_run->add_flag("--no-clean", no_clean, "Do not symmetrize/clean cc and tc input");
  c_run->add_option("--head", run_args.head, "Result entries printed");
  add_ingest(c_run);
  add_json(c_run);

  InfoArgs info;
  std::string info_input;
  auto* c_info = app.add_subcommand("info", "Describe a Matrix Market or B2SR file");
  c_info->add_option("input", info_input, "Matrix Market or .b2sr file");
  c_info->add_flag("--schema", info.schema, "Print the path of the report JSON schema");
  add_json(c_info);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  const Exec exec = Exec::from_env(threads);
  ingest.symmetrize = symmetrize ? Symmetrize::Union : Symmetrize::None;
  std::optional<std::filesystem::path> json;
  if (!json_path.empty()) json = json_path;
  const TileDim td = tile_dim_from_int(tile);

  if (c_convert->parsed()) {
    convert.tile_dim = td;
    convert.ingest = ingest;
    convert.json = json;
    return cmd_convert(convert, out, err);
  }
  if (c_profile->parsed()) {
    if (samples_opt->count() > 0) profile.samples = samples;
    profile.ingest = ingest;
    profile.json = json;
    profile.exec = exec;
    return cmd_profile(profile, out, err);
  }
  if (c_bench->parsed()) {
    bench.kernel = bench_kernel_from_string(kernel);
    bench.tile_dim = td;
    bench.ingest = ingest;
    bench.json = json;
    bench.exec = exec;
    return cmd_bench(bench, out, err);
  }
  if (c_run->parsed()) {
    run_args.algo = algo_from_string(algo);
    if (run_tile->count() > 0) run_args.tile_dim = td;
    run_args.clean = !no_clean;
    run_args.ingest = ingest;
    run_args.json = json;
    run_args.exec = exec;
    return cmd_run(run_args, out, err);
  }
  if (!info_input.empty()) info.input = info_input;
  info.json = json;
  return cmd_info(info, out, err);
}

}  // namespace bitblas::cli
