#include "bitblas/report.hpp"

#include <cmath>
#include <fstream>

#include "bitblas/error.hpp"

namespace bitblas {

Json make_report(std::string_view kind, Json payload) {
  Json report;
  report["schemaVersion"] = kReportSchemaVersion;
  report["kind"] = std::string(kind);
  report["payload"] = std::move(payload);
  return report;
}

Json to_json(const SampleProfileReport& report) {
  Json payload;
  payload["n"] = report.n;
  payload["nnz"] = report.nnz;
  payload["csrBytes"] = report.csr_bytes;
  payload["seed"] = report.seed;
  payload["sampledTileRows"] = report.sampled_tile_rows;
  payload["recommendedTileDim"] = dim(report.recommended());
  Json per = Json::object();
  for (const auto& e : report.per_tile_dim) {
    Json entry;
    entry["nTileRows"] = e.n_tile_rows;
    entry["sampledTileRows"] = e.sampled_tile_rows;
    entry["estTileCount"] = e.est_tile_count;
    entry["estBytes"] = e.est_bytes;
    entry["estCompressionRatio"] = e.est_compression_ratio;
    entry["avgNnzOccupancy"] = e.avg_nnz_occupancy;
    per[to_string(e.tile_dim)] = std::move(entry);
  }
  payload["tileDims"] = std::move(per);
  return make_report("profile", std::move(payload));
}

Json to_json(const BenchResult& result) {
  Json payload;
  payload["kernel"] = result.kernel;
  payload["tileDim"] = dim(result.tile_dim);
  payload["reps"] = result.reps;
  payload["timesNsB2sr"] = result.times_ns_b2sr;
  payload["timesNsCsr"] = result.times_ns_csr;
  payload["meanNsB2sr"] = result.mean_ns_b2sr;
  payload["meanNsCsr"] = result.mean_ns_csr;
  payload["ratio"] = result.ratio;
  payload["outputsMatch"] = result.outputs_match;
  return make_report("bench", std::move(payload));
}

Json to_json(const AlgoResult& result, std::string_view algo) {
  Json payload;
  payload["algo"] = std::string(algo);
  payload["iterations"] = result.iterations;
  payload["converged"] = result.converged;
  if (result.per_vertex.size() == 0) {
    payload["count"] = result.count;
  } else {
    Json values = Json::array();
    for (double v : result.per_vertex) {
      if (std::isinf(v))
        values.push_back(nullptr);
      else
        values.push_back(v);
    }
    payload["result"] = std::move(values);
  }
  return make_report("run", std::move(payload));
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

void write_report(const Json& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open report file " + path.string() + " for writing");
  out << dump_report(report);
  out.flush();
  if (!out) throw IoError("failed writing report file " + path.string());
}

}  // namespace bitblas
