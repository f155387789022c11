#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bitblas/algorithms.hpp"
#include "bitblas/sample_profile.hpp"

namespace bitblas {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// Timing comparison between one B2SR kernel and its CSR float baseline.
struct BenchResult {
  std::string kernel;
  TileDim tile_dim = TileDim::k8;
  std::uint32_t reps = 5;
  std::vector<double> times_ns_b2sr;
  std::vector<double> times_ns_csr;
  double mean_ns_b2sr = 0.0;
  double mean_ns_csr = 0.0;
  /// meanNsCsr / meanNsB2sr; above 1 means the B2SR kernel was faster.
  double ratio = 0.0;
  bool outputs_match = false;
};

/// {"schemaVersion", "kind", "payload"} envelope shared by every report.
Json make_report(std::string_view kind, Json payload = Json::object());

Json to_json(const SampleProfileReport& report);
Json to_json(const BenchResult& result);
/// +inf entries become null.
Json to_json(const AlgoResult& result, std::string_view algo);

std::string dump_report(const Json& report);
/// Throws IoError naming the path on failure.
void write_report(const Json& report, const std::filesystem::path& path);

}  // namespace bitblas
