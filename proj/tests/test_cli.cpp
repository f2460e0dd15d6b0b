#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ecss/cli.hpp"
#include "ecss/experiments.hpp"

using namespace ecss;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("ecss_test_" + name);
  std::ofstream(path) << content;
  return path;
}

// Non-comment lines of a CSV report.
std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

}  // namespace

TEST(Cli, Beta) {
  const auto r = run({"beta", "--s", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_NEAR(doc["beta"].get<double>(), 3.73205, 1e-5);
  EXPECT_EQ(doc["version"], cli::kFormatVersion);
  EXPECT_EQ(doc["dominant_h"], json::array({1, 2}));
}

TEST(Cli, BadPairs) {
  const auto r = run({"badpairs", "--r", "2", "--s", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["f"], 14);
  EXPECT_EQ(doc["per_h"], json::array({9}));
}

TEST(Cli, DiscOnEquidistantPoints) {
  std::string content = "# points\n";
  for (int k = 0; k < 8; ++k) content += std::to_string(k / 8.0) + "\n";
  const auto path = temp_file("k8.csv", content);
  const auto r = run({"disc", "--input", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_DOUBLE_EQ(json::parse(r.out)["value"].get<double>(), 0.125);
  EXPECT_EQ(json::parse(r.out)["method"], "exact");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"nonsense"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"beta", "--s", "2", "--bogus"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"curve-info", "--curve", "6,1,1"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"badpairs", "--r", "14", "--s", "1"}).code, cli::kExitScaleGuard);
  EXPECT_EQ(run({"disc", "--input", "/nonexistent/points.csv"}).code, cli::kExitIo);
  const auto path = temp_file("bad.csv", "0.1\nhello\n");
  EXPECT_EQ(run({"disc", "--input", path.string()}).code, cli::kExitIo);
  const auto r = run({"curve-info", "--curve", "5,0,0"});
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, CurveAndLfsrInfo) {
  auto r = run({"curve-info", "--curve", "5,1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["order"], 9);
  r = run({"lfsr-info", "--poly", "0x409"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["period"], 1023);
  EXPECT_EQ(doc["irreducible"], true);
}

TEST(Cli, GenWorkedTrace) {
  const auto r = run({"gen", "--curve", "5,1,1", "--poly", "0x7", "--init", "0x1", "--weights", "0,1;2,1", "--count", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("# ecss gen version 1", 0), 0U);
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 3U);
  EXPECT_EQ(std::stod(lines[0]), 0.0);
  EXPECT_EQ(std::stod(lines[1]), 0.4);
  EXPECT_EQ(std::stod(lines[2]), 0.6);
}

TEST(Cli, GenTuplesRoundTrip) {
  const auto gen = run({"gen", "--curve", "101,2,3", "--poly", "0x43", "--seed", "4", "--count", "9", "--s", "2"});
  ASSERT_EQ(gen.code, 0) << gen.err;
  EXPECT_EQ(data_lines(gen.out).size(), 10U);  // header + 9 rows
  const auto path = temp_file("tuples.csv", gen.out);
  const auto disc = run({"disc", "--input", path.string()});
  ASSERT_EQ(disc.code, 0) << disc.err;
  const auto doc = json::parse(disc.out);
  EXPECT_EQ(doc["s"], 2);
  EXPECT_EQ(doc["n"], 9);
}

TEST(Cli, GenThenDiscEqualsSweep) {
  experiments::ExperimentConfig config(ec::validate_curve(1009, 2, 3), gf2::BinaryPoly(0x409));
  config.r = 10;
  config.n_grid = {500};
  config.seed = 77;
  const double expected = experiments::discrepancy_sweep(config).discrepancy[0][0];

  const auto gen = run({"gen", "--curve", "1009,2,3", "--poly", "0x409", "--seed", "77", "--count", "500"});
  ASSERT_EQ(gen.code, 0) << gen.err;
  const auto path = temp_file("gen500.csv", gen.out);
  const auto disc = run({"disc", "--input", path.string()});
  ASSERT_EQ(disc.code, 0) << disc.err;
  EXPECT_NEAR(json::parse(disc.out)["value"].get<double>(), expected, 1e-12);
}

TEST(Cli, BoundsAndExpsum) {
  auto r = run({"bounds", "--N", "3", "--p", "5", "--r", "2", "--tau", "3", "--s", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_TRUE(doc.contains("theorem1"));
  r = run({"expsum-check", "--curve", "101,2,3", "--c", "inf"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(data_lines(r.out).empty());
}

TEST(Cli, ExperimentWritesCsv) {
  const auto config = temp_file("exp.json", R"({"curve":{"p":101,"a":2,"b":3},"poly_hex":"0x43","r":6,"s":1,
      "n_grid":[8,16,32],"samples":3,"delta":1.0,"seed":2})");
  const auto out = std::filesystem::temp_directory_path() / "ecss_test_exp.csv";
  const auto r = run({"-o", out.string(), "experiment", "--config", config.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(out);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto lines = data_lines(text);
  ASSERT_EQ(lines.size(), 4U);
  EXPECT_EQ(lines[0].rfind("N,mean,median,q90,thm_bound,elma_bound", 0), 0U);
}
