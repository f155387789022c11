#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bitblas/cli.hpp"
#include "bitblas/container.hpp"
#include "bitblas/matrix_market.hpp"
#include "test_util.hpp"

namespace bitblas {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bitblas_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const CsrMatrix& m) {
    const fs::path p = dir_ / name;
    write_matrix_market_file(m, p);
    return p;
  }
  fs::path write_text(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }
  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "bitblas");
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }
  Json json_out() { return Json::parse(out_.str().substr(out_.str().find('{'))); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(Cli, ConvertDenseFixture) {
  const fs::path in = write("dense.mtx", testing::dense_pattern(8));
  const fs::path out = dir_ / "dense.b2sr";
  ASSERT_EQ(run({"convert", in.string(), out.string(), "-t", "8"}), 0) << err_.str();
  EXPECT_NE(out_.str().find("compression ratio: 0.036496"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("CSR bytes: 548"), std::string::npos);
  EXPECT_NE(out_.str().find("B2SR-8 bytes: 20"), std::string::npos);
  EXPECT_EQ(load_b2sr(out).num_tiles(), 1u);
  ASSERT_EQ(run({"info", out.string()}), 0);
  EXPECT_NE(out_.str().find("tiles: 1"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  const fs::path rect = write_text("rect.mtx", "%%MatrixMarket matrix coordinate pattern general\n3 4 1\n1 1\n");
  EXPECT_EQ(run({"convert", rect.string(), (dir_ / "x.b2sr").string()}), cli::kParseError);
  EXPECT_NE(err_.str().find("square"), std::string::npos) << err_.str();
  EXPECT_EQ(run({"convert", (dir_ / "missing.mtx").string(), (dir_ / "x.b2sr").string()}), cli::kIoError);
  const fs::path ok = write("ok.mtx", testing::path_graph(4));
  EXPECT_EQ(run({"convert", ok.string(), (dir_ / "no" / "such" / "x.b2sr").string()}), cli::kIoError);
  EXPECT_EQ(run({"convert", ok.string(), (dir_ / "x.b2sr").string(), "-t", "12"}), cli::kParseError);
  EXPECT_EQ(run({"bogus"}), cli::kParseError);
  const fs::path directed = write("directed.mtx", CsrMatrix::from_entries(3, {{0, 1}}));
  EXPECT_EQ(run({"run", "cc", directed.string(), "--no-clean", "-t", "4"}), cli::kInvariantError);
  EXPECT_EQ(run({"run", "bfs", ok.string(), "--src", "9"}), cli::kParseError);
  EXPECT_EQ(run({"profile", ok.string(), "--samples", "5"}), cli::kParseError);
  const fs::path bad = write_text("bad.b2sr", "nope");
  EXPECT_EQ(run({"info", bad.string()}), cli::kInvariantError);
}

TEST_F(Cli, RunAlgorithms) {
  const fs::path path = write("path.mtx", testing::path_graph(4));
  ASSERT_EQ(run({"run", "bfs", path.string(), "--src", "0", "--json", "-"}), 0) << err_.str();
  EXPECT_EQ(json_out()["payload"]["result"], Json::parse("[0,1,2,3]"));
  ASSERT_EQ(run({"run", "sssp", path.string(), "--json", "-"}), 0);
  EXPECT_EQ(json_out()["payload"]["result"], Json::parse("[0,1,2,3]"));

  const fs::path k4 = write("k4.mtx", lower_triangle(testing::complete_graph(4)));
  ASSERT_EQ(run({"run", "tc", k4.string(), "--json", "-"}), 0) << err_.str();
  EXPECT_EQ(json_out()["payload"]["count"], 4);
  EXPECT_NE(out_.str().find("triangles: 4"), std::string::npos);

  const fs::path cycle = write("cycle.mtx", CsrMatrix::from_entries(2, {{0, 1}, {1, 0}}));
  ASSERT_EQ(run({"run", "pr", cycle.string(), "--json", "-"}), 0);
  EXPECT_EQ(json_out()["payload"]["result"], Json::parse("[0.5,0.5]"));

  const fs::path parts = write("parts.mtx", CsrMatrix::from_entries(4, {{1, 0}, {3, 2}}));
  ASSERT_EQ(run({"run", "cc", parts.string(), "--json", "-"}), 0);
  EXPECT_EQ(json_out()["payload"]["result"], Json::parse("[0,0,2,2]"));
}

TEST_F(Cli, ProfileDeterministic) {
  testing::Rng rng(51);
  const fs::path in = write("r.mtx", testing::random_pattern(rng, 120, 0.05));
  const fs::path a = dir_ / "a.json", b = dir_ / "b.json";
  ASSERT_EQ(run({"profile", in.string(), "--samples", "7", "--seed", "3", "--json", a.string()}), 0);
  ASSERT_EQ(run({"profile", in.string(), "--samples", "7", "--seed", "3", "--json", b.string()}), 0);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_NE(out_.str().find("recommended tileDim"), std::string::npos);
}

TEST_F(Cli, BenchGate) {
  testing::Rng rng(52);
  const fs::path in = write("r.mtx", testing::random_pattern(rng, 90, 0.05));
  for (const char* k : {"bmv-bbb", "bmv-bbf", "bmv-bff", "bmm-sum"}) {
    ASSERT_EQ(run({"bench", in.string(), "-k", k, "-t", "16", "--json", "-"}), 0) << k << err_.str();
    const Json j = json_out()["payload"];
    EXPECT_EQ(j["reps"], 5);
    EXPECT_EQ(j["timesNsB2sr"].size(), 5u);
    EXPECT_TRUE(j["outputsMatch"].get<bool>());
  }
  cli::BenchArgs args;
  args.input = in;
  args.inject_fault = true;
  for (auto k : {cli::BenchKernel::BmvBinBinBin, cli::BenchKernel::BmvBinBinFull, cli::BenchKernel::BmvBinFullFull,
                 cli::BenchKernel::BmmSum}) {
    args.kernel = k;
    std::ostringstream o, e;
    EXPECT_EQ(cli::cmd_bench(args, o, e), cli::kCorrectnessFailure) << cli::to_string(k);
  }
}

TEST_F(Cli, DefaultTileDimFollowsProfile) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t k = 0; k < 8; ++k)
    for (std::uint32_t i = 0; i < 16; ++i)
      for (std::uint32_t j = 0; j < 16; ++j) e.emplace_back(16 * k + i, 16 * k + j);
  EXPECT_EQ(cli::default_tile_dim(CsrMatrix::from_entries(128, e)), TileDim::k16);
  const fs::path in = write("blocks.mtx", CsrMatrix::from_entries(128, e));
  ASSERT_EQ(run({"profile", in.string(), "--all"}), 0);
  EXPECT_NE(out_.str().find("recommended tileDim: 16"), std::string::npos) << out_.str();
}

TEST_F(Cli, InfoSchemaAndThreads) {
  ASSERT_EQ(run({"info", "--schema"}), 0);
  EXPECT_TRUE(fs::exists(fs::path(out_.str().substr(0, out_.str().find('\n')))));
  const fs::path in = write("p.mtx", testing::path_graph(40));
  ASSERT_EQ(run({"--threads", "3", "run", "bfs", in.string(), "-t", "4", "--json", "-"}), 0);
  const Json three = json_out();
  setenv("BITBLAS_THREADS", "2", 1);
  ASSERT_EQ(run({"run", "bfs", in.string(), "-t", "4", "--json", "-"}), 0);
  unsetenv("BITBLAS_THREADS");
  EXPECT_EQ(json_out(), three);
  ASSERT_EQ(run({"info", in.string(), "--json", "-"}), 0);
  EXPECT_EQ(json_out()["payload"]["nnz"], 78);
}

}  // namespace
}  // namespace bitblas
