#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "wpnum/io.hpp"
#include "wpnum_cli/cli.hpp"
#include "wpnum_cli/parallel.hpp"
#include "wpnum_cli/verify.hpp"

namespace fs = std::filesystem;
using wpnum::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("wpnum_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, VerifySmallRunPassesAndWritesReport) {
  const auto r = call({"verify", "--trials", "5", "--out", path("r.json")});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto doc = nlohmann::json::parse(slurp(path("r.json")));
  EXPECT_TRUE(doc["pass"].get<bool>());
  EXPECT_EQ(doc["seed"].get<int>(), 42);
  ASSERT_FALSE(doc["checks"].empty());
  for (const auto& c : doc["checks"]) {
    for (const char* key : {"check", "value", "bound", "tol", "pass", "anchor", "runtime_ms"})
      EXPECT_TRUE(c.contains(key)) << key;
    EXPECT_FALSE(c["anchor"].get<std::string>().empty());
    EXPECT_TRUE(c["runtime_ms"].is_null());
  }
}

TEST_F(CliTest, VerifyRecordFieldOrderIsFixed) {
  ASSERT_EQ(call({"verify", "--trials", "2", "--out", path("r.json")}).code, 0);
  const std::string text = slurp(path("r.json"));
  const auto first = text.find("\"check\"");
  ASSERT_NE(first, std::string::npos);
  std::size_t pos = first;
  for (const char* key : {"\"value\"", "\"bound\"", "\"tol\"", "\"pass\"", "\"anchor\"", "\"runtime_ms\""}) {
    const auto next = text.find(key, pos);
    ASSERT_NE(next, std::string::npos) << key;
    pos = next;
  }
}

TEST_F(CliTest, VerifyIsDeterministicAcrossWorkerCounts) {
  ::setenv("WPNUM_WORKERS", "1", 1);
  ASSERT_EQ(call({"verify", "--trials", "4", "--out", path("a.json")}).code, 0);
  ::setenv("WPNUM_WORKERS", "3", 1);
  ASSERT_EQ(call({"verify", "--trials", "4", "--out", path("b.json")}).code, 0);
  ::unsetenv("WPNUM_WORKERS");
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(CliTest, ZeroToleranceFailsWithExitOne) {
  const auto r = call({"verify", "--trials", "3", "--tol-scale", "0", "--out", path("r.json")});
  EXPECT_EQ(r.code, 1);
  const auto doc = nlohmann::json::parse(slurp(path("r.json")));
  EXPECT_FALSE(doc["pass"].get<bool>());
}

TEST_F(CliTest, MissingOutputDirectoryIsUsageError) {
  const auto r = call({"verify", "--trials", "1", "--out", path("missing/dir/r.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("does not exist"), std::string::npos);
}

TEST_F(CliTest, InvalidConfigIsUsageError) {
  EXPECT_EQ(call({"verify", "--nr", "3", "--out", path("r.json")}).code, 2);
  EXPECT_EQ(call({"verify", "--trials", "0", "--out", path("r.json")}).code, 2);
  EXPECT_EQ(call({"verify", "--no-such-flag"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  std::ofstream(path("bad.json")) << "{\"nr\": \"many\"}";
  EXPECT_EQ(call({"verify", "--config", path("bad.json"), "--out", path("r.json")}).code, 2);
  std::ofstream(path("unknown.json")) << "{\"colour\": 1}";
  EXPECT_EQ(call({"verify", "--config", path("unknown.json"), "--out", path("r.json")}).code, 2);
}

TEST_F(CliTest, FlagsOverrideConfigFileOverridesDefaults) {
  std::ofstream(path("cfg.json")) << "{\"trials\": 2, \"seed\": 9, \"degree\": 12}";
  ASSERT_EQ(call({"verify", "--config", path("cfg.json"), "--seed", "11", "--out", path("r.json")}).code, 0);
  const auto cfg = nlohmann::json::parse(slurp(path("r.json")))["config"];
  EXPECT_EQ(cfg["trials"].get<int>(), 2);
  EXPECT_EQ(cfg["seed"].get<int>(), 11);
  EXPECT_EQ(cfg["degree"].get<int>(), 12);
  EXPECT_EQ(cfg["nr"].get<int>(), 64);
}

TEST_F(CliTest, TimingsFlagFillsRuntime) {
  ASSERT_EQ(call({"verify", "--trials", "1", "--timings", "--out", path("r.json")}).code, 0);
  const auto doc = nlohmann::json::parse(slurp(path("r.json")));
  for (const auto& c : doc["checks"]) EXPECT_TRUE(c["runtime_ms"].is_number());
}

TEST_F(CliTest, ProjectReproducesHarmonicInput) {
  // (1 - |z|^2)^2 conj(z) has phi = z.
  std::ofstream(path("mu.json")) << R"({"kind": "harmonic_beltrami", "offset": 0, "re": [0, 1], "im": [0, 0]})";
  const auto r = call({"project", path("mu.json"), "--degree", "8", "--out", path("p.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("trivial_part_ok=true"), std::string::npos);
  const auto file = wpnum::read_coefficient_file(path("p.json"));
  EXPECT_EQ(file.kind, wpnum::CoefficientKind::harmonic_beltrami);
  ASSERT_EQ(file.coeffs.size(), 9u);
  for (std::size_t n = 0; n < file.coeffs.size(); ++n)
    EXPECT_NEAR(std::abs(file.coeffs[n] - (n == 1 ? 1.0 : 0.0)), 0.0, 1e-10) << n;
}

TEST_F(CliTest, ProjectOfGridRoundTrip) {
  ASSERT_EQ(call({"grid", "--field", "zero", "--nr", "16", "--ntheta", "64", "--out", path("z.csv")}).code, 0);
  ASSERT_EQ(call({"project", path("z.csv"), "--degree", "6", "--out", path("z.json")}).code, 0);
  for (auto c : wpnum::read_coefficient_file(path("z.json")).coeffs) EXPECT_EQ(c, wpnum::Complex{});

  ASSERT_EQ(call({"grid", "--field", "radial", "--out", path("rad.csv")}).code, 0);
  ASSERT_EQ(call({"project", path("rad.csv"), "--out", path("rad.json")}).code, 0);
  for (auto c : wpnum::read_coefficient_file(path("rad.json")).coeffs) EXPECT_LT(std::abs(c), 1e-8);

  std::ofstream(path("mu.json")) << R"({"kind": "harmonic_beltrami", "offset": 2, "re": [0.5], "im": [-1]})";
  ASSERT_EQ(call({"grid", "--input", path("mu.json"), "--out", path("mu.csv")}).code, 0);
  ASSERT_EQ(call({"project", path("mu.csv"), "--degree", "5", "--out", path("back.json")}).code, 0);
  const auto back = wpnum::read_coefficient_file(path("back.json")).coeffs;
  ASSERT_EQ(back.size(), 6u);
  EXPECT_LT(std::abs(back[2] - wpnum::Complex(0.5, -1.0)), 1e-10);
}

TEST_F(CliTest, ProjectRejectsNaNWithLineNumber) {
  std::ofstream(path("nan.csv")) << "x,y,weight,re,im\n0.1,0.2,0.5,1,0\n0.3,0.1,0.5,nan,0\n";
  const auto r = call({"project", path("nan.csv")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_EQ(call({"project", path("does_not_exist.json")}).code, 2);
  std::ofstream(path("taylor.json")) << R"({"kind": "taylor", "offset": 0, "re": [1], "im": [0]})";
  EXPECT_EQ(call({"project", path("taylor.json")}).code, 2);
}

TEST_F(CliTest, ProjectWritesToStdoutWithoutOut) {
  std::ofstream(path("mu.json")) << R"({"kind": "harmonic_beltrami", "offset": 0, "re": [1], "im": [0]})";
  const auto r = call({"project", path("mu.json"), "--degree", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(wpnum::parse_coefficient_json(r.out).coeffs.size(), 3u);
  EXPECT_NE(r.err.find("max_residual_moment"), std::string::npos);
}

TEST_F(CliTest, WulfTableAndSummary) {
  const auto r = call({"wulf", "--r", "2", "--t", "1.5", "--trials", "20", "--seed", "7", "--out", path("w.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("max_ratio="), std::string::npos);
  std::istringstream csv(slurp(path("w.csv")));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "trial,sup,norm,bound,ratio");
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    const double ratio = std::stod(line.substr(line.rfind(',') + 1));
    EXPECT_GT(ratio, 0.0);
    EXPECT_LE(ratio, 1.0);
  }
  EXPECT_EQ(rows, 20);
}

TEST_F(CliTest, WulfTrialIsReproducibleInIsolation) {
  const auto a = wpnum::cli::wulf_trial(2.0, 1.5, 7, 0, 13);
  const auto b = wpnum::cli::wulf_trial(2.0, 1.5, 7, 0, 13);
  EXPECT_EQ(a.sup, b.sup);
  EXPECT_EQ(a.norm, b.norm);
  const auto c = wpnum::cli::wulf_trial(2.0, 1.5, 7, 0, 14);
  EXPECT_NE(a.norm, c.norm);
}

TEST_F(CliTest, WulfRejectsBadRange) {
  EXPECT_EQ(call({"wulf", "--r", "2", "--t", "1.5", "--trials", "0"}).code, 2);
  EXPECT_EQ(call({"wulf", "--r", "2", "--t", "2"}).code, 2);
  EXPECT_EQ(call({"wulf", "--r", "2", "--t", "0.5"}).code, 2);
  EXPECT_EQ(call({"wulf", "--t", "1.5"}).code, 2);
}

TEST_F(CliTest, GramFormats) {
  const auto csv = call({"gram", "--degree", "2"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("i,j,re,im\n", 0), 0u);
  const auto js = call({"gram", "--degree", "2", "--format", "json", "--quadrature", "--nr", "16", "--ntheta", "32"});
  ASSERT_EQ(js.code, 0);
  const auto doc = nlohmann::json::parse(js.out);
  EXPECT_EQ(doc["size"].get<int>(), 3);
  EXPECT_NEAR(doc["re"][0][0].get<double>(), wpnum::pi / 3.0, 1e-12);
  EXPECT_EQ(call({"gram", "--format", "xml"}).code, 2);
}

TEST_F(CliTest, HelpExitsZero) {
  const auto r = call({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(ParallelMap, KeepsIndexOrder) {
  const auto v = wpnum::cli::parallel_map(100, 4, [](int i) { return i * i; });
  ASSERT_EQ(v.size(), 100u);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(v[static_cast<std::size_t>(i)], i * i);
  EXPECT_TRUE(wpnum::cli::parallel_map(0, 4, [](int i) { return i; }).empty());
}

TEST(ParallelMap, RethrowsTaskException) {
  EXPECT_THROW(wpnum::cli::parallel_map(20, 3,
                                        [](int i) {
                                          if (i == 7) throw std::runtime_error("boom");
                                          return i;
                                        }),
               std::runtime_error);
}

TEST(ParallelMap, WorkerCountFromEnvironment) {
  ::setenv("WPNUM_WORKERS", "5", 1);
  EXPECT_EQ(wpnum::cli::default_workers(), 5);
  ::setenv("WPNUM_WORKERS", "zero", 1);
  EXPECT_GE(wpnum::cli::default_workers(), 1);
  ::unsetenv("WPNUM_WORKERS");
}

TEST(VerifyGroups, UnknownGroupThrows) {
  EXPECT_THROW(wpnum::cli::run_group("nope", {}), wpnum::ParameterError);
  EXPECT_FALSE(wpnum::cli::check_groups().empty());
}
