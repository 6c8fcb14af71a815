#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "medwave/image.hpp"
#include "test_support.hpp"

namespace medwave::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "medwave");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

TEST(Cli, MetricsOfIdenticalImages) {
  testing::TempDir dir;
  const auto a = (dir / "a.pgm").string();
  save_pgm(testing::random_byte_image(16, 16, 1), a);
  const CliRun r = run({"metrics", a, a});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "MSE=0.0000\nPSNR=inf\n");
}

TEST(Cli, BenchDefaultsToSixtyRows) {
  const CliRun r = run({"bench"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(line_count(r.out), 61u);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "image,sigma,case,estimated_sigma,th_H,th_V,th_D,mse,psnr");
}

TEST(Cli, BenchIsReproducibleAcrossRunsAndJobCounts) {
  const CliRun a = run({"bench", "--seed", "5"});
  const CliRun b = run({"bench", "--seed", "5"});
  const CliRun c = run({"bench", "--seed", "5", "--jobs", "6"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, BenchWithFilesSubsetsAndMarkdown) {
  testing::TempDir dir;
  const auto img = (dir / "pic.pgm").string();
  save_pgm(testing::random_byte_image(32, 32, 3), img);
  const CliRun r = run({"bench", img, "--sigma", "10,30", "--case", "dwt,mf", "--format", "markdown",
                     "--out", (dir / "out").string(), "--wavelet", "db2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(line_count(r.out), 2u + 4u);
  EXPECT_NE(r.out.find("| pic | 10 | mf |"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir / "out" / "report.md"));
  EXPECT_TRUE(std::filesystem::exists(dir / "out" / "pic_s30_dwt.pgm"));
}

TEST(Cli, DenoiseWritesImageAndOneReportLine) {
  testing::TempDir dir;
  const auto in = (dir / "in.pgm").string();
  save_pgm(testing::random_byte_image(32, 32, 4), in);
  const CliRun r = run({"denoise", "--case", "mf", "--sigma", "15", "--seed", "7", in});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(std::filesystem::exists(dir / "in_mf.pgm"));
  ASSERT_EQ(line_count(r.out), 2u);
  EXPECT_EQ(r.out.substr(r.out.find('\n') + 1).rfind("in,15,mf,", 0), 0u) << r.out;

  const CliRun again = run({"denoise", "--case", "mf", "--sigma", "15", "--seed", "7", in});
  EXPECT_EQ(again.out, r.out);
}

TEST(Cli, DenoiseWithoutReferenceOmitsScores) {
  testing::TempDir dir;
  const auto in = (dir / "noisy.pgm").string();
  save_pgm(testing::random_byte_image(32, 32, 5), in);
  const auto out = (dir / "restored.pgm").string();
  const CliRun r = run({"denoise", in, "--case", "dwt", "--out", out, "--no-clip",
                     "--boundary", "symmetric", "--signed-threshold"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(std::filesystem::exists(out));
  EXPECT_EQ(r.out.back(), '\n');
  EXPECT_EQ(r.out.substr(r.out.size() - 3), ",,\n");
}

TEST(Cli, EstimateTable) {
  const CliRun r = run({"estimate", "--sigma", "20"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(line_count(r.out), 6u);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "image,sigma,std_original,std_noisy,estimated_sigma");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"bench", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"bench", "--case", "wiener"}).code, kExitUsage);
  EXPECT_EQ(run({"bench", "--sigma", "-3"}).code, kExitUsage);
  EXPECT_EQ(run({"metrics", "only-one.pgm"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, IoAndDomainErrors) {
  testing::TempDir dir;
  const CliRun missing = run({"metrics", (dir / "x.pgm").string(), (dir / "y.pgm").string()});
  EXPECT_EQ(missing.code, kExitIo);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);

  const auto a = (dir / "a.pgm").string();
  const auto b = (dir / "b.pgm").string();
  save_pgm(testing::random_byte_image(8, 8, 1), a);
  save_pgm(testing::random_byte_image(8, 6, 1), b);
  EXPECT_EQ(run({"metrics", a, b}).code, kExitDomain);
  EXPECT_EQ(run({"denoise", a, "--window", "4"}).code, kExitDomain);
}

}  // namespace
}  // namespace medwave::cli
