// Copyright 2026 The iqrdenoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the built iqrdenoise executable through the shell.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "iqrdenoise/image.h"
#include "iqrdenoise/pgm.h"

#ifndef IQRDENOISE_CLI_PATH
#error "IQRDENOISE_CLI_PATH must name the CLI binary"
#endif

namespace iqrdenoise {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult RunCli(const std::string& args) {
  const std::string cmd = std::string("\"") + IQRDENOISE_CLI_PATH + "\" " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("iqrdenoise_cli_" + std::string(
                ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string P(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, NoArgumentsIsUsageError) { EXPECT_EQ(RunCli("").exit_code, 2); }

TEST_F(CliTest, NoiseZeroDensityKeepsRaster) {
  GrayImage img(7, 5);
  for (std::size_t i = 0; i < img.size(); ++i) img.mutable_pixels()[i] = static_cast<std::uint8_t>(i * 7);
  WritePgmFile(P("in.pgm"), img);
  ASSERT_EQ(RunCli("noise " + P("in.pgm") + " --out " + P("out.pgm") + " --density 0 --seed 9").exit_code, 0);
  EXPECT_EQ(ReadPgmFile(P("out.pgm")), img);
}

TEST_F(CliTest, NoiseGoldenFourByFour) {
  WritePgmFile(P("in.pgm"), GrayImage(4, 4, 100));
  ASSERT_EQ(RunCli("noise " + P("in.pgm") + " --out " + P("out.pgm") + " --density 0.1 --seed 42").exit_code, 0);
  GrayImage expected(4, 4, 100);
  expected(1, 3) = 0;
  EXPECT_EQ(ReadPgmFile(P("out.pgm")), expected);
}

TEST_F(CliTest, MissingInputIsUsageError) {
  EXPECT_EQ(RunCli("noise " + P("nope.pgm") + " --out " + P("out.pgm")).exit_code, 2);
  EXPECT_FALSE(fs::exists(P("out.pgm")));
}

TEST_F(CliTest, MalformedInputIsProcessingError) {
  std::ofstream(P("bad.pgm")) << "P7\n1 1\n255\n";
  EXPECT_EQ(RunCli("denoise " + P("bad.pgm") + " --out " + P("out.pgm")).exit_code, 1);
}

TEST_F(CliTest, BadDensityIsUsageError) {
  WritePgmFile(P("in.pgm"), GrayImage(4, 4, 100));
  EXPECT_EQ(RunCli("noise " + P("in.pgm") + " --out " + P("o.pgm") + " --density 1.5").exit_code, 2);
}

TEST_F(CliTest, DenoiseIqrConstantImageUnchanged) {
  WritePgmFile(P("in.pgm"), GrayImage(9, 9, 61));
  ASSERT_EQ(RunCli("denoise " + P("in.pgm") + " --out " + P("out.pgm") + " --filter iqr --window 3").exit_code, 0);
  EXPECT_EQ(ReadPgmFile(P("out.pgm")), GrayImage(9, 9, 61));
}

TEST_F(CliTest, DenoiseIqrRepairsImpulses) {
  GrayImage img(16, 16, 102);
  img(2, 3) = 255;
  img(9, 12) = 0;
  img(14, 1) = 255;
  WritePgmFile(P("in.pgm"), img);
  ASSERT_EQ(RunCli("denoise " + P("in.pgm") + " --out " + P("out.pgm") + " --filter iqr --window 8").exit_code, 0);
  EXPECT_EQ(ReadPgmFile(P("out.pgm")), GrayImage(16, 16, 102));
}

TEST_F(CliTest, MedianEvenWindowIsUsageError) {
  WritePgmFile(P("in.pgm"), GrayImage(9, 9, 61));
  EXPECT_EQ(RunCli("denoise " + P("in.pgm") + " --out " + P("out.pgm") + " --filter median --window 4").exit_code, 2);
  EXPECT_FALSE(fs::exists(P("out.pgm")));
}

TEST_F(CliTest, UnknownFilterIsUsageError) {
  WritePgmFile(P("in.pgm"), GrayImage(9, 9, 61));
  EXPECT_EQ(RunCli("denoise " + P("in.pgm") + " --out " + P("out.pgm") + " --filter mean").exit_code, 2);
}

TEST_F(CliTest, PsnrPrintsMseAndDecibels) {
  WritePgmFile(P("a.pgm"), GrayImage(3, 3, 100));
  WritePgmFile(P("b.pgm"), GrayImage(3, 3, 101));
  const RunResult r = RunCli("psnr " + P("a.pgm") + " " + P("b.pgm"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "mse=1.000000 psnr_db=48.1308\n");
  EXPECT_EQ(RunCli("psnr " + P("a.pgm") + " " + P("a.pgm")).output, "mse=0.000000 psnr_db=inf\n");
}

TEST_F(CliTest, PsnrShapeMismatchIsProcessingError) {
  WritePgmFile(P("a.pgm"), GrayImage(3, 3, 100));
  WritePgmFile(P("b.pgm"), GrayImage(3, 4, 100));
  EXPECT_EQ(RunCli("psnr " + P("a.pgm") + " " + P("b.pgm")).exit_code, 1);
}

TEST_F(CliTest, BenchWritesSortedCsv) {
  WritePgmFile(P("zeta.pgm"), GrayImage(12, 12, 90));
  WritePgmFile(P("alpha.pgm"), GrayImage(10, 14, 30));
  const RunResult r = RunCli("bench " + P("zeta.pgm") + " " + P("alpha.pgm") + " --windows 3,5 --out -");
  ASSERT_EQ(r.exit_code, 0);
  std::istringstream in(r.output);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines[0], "image_id,filter,window_k,density,seed,psnr_filtered_db,psnr_noisy_db,wall_ms");
  EXPECT_EQ(lines[1].rfind("alpha,iqr,3,0.1,", 0), 0u);
  EXPECT_EQ(lines[4].rfind("alpha,median,5,0.1,", 0), 0u);
  EXPECT_EQ(lines[8].rfind("zeta,median,5,0.1,", 0), 0u);
}

TEST_F(CliTest, BenchToFile) {
  WritePgmFile(P("one.pgm"), GrayImage(8, 8, 90));
  ASSERT_EQ(RunCli("bench " + P("one.pgm") + " --out " + P("r.csv")).exit_code, 0);
  std::ifstream in(P("r.csv"));
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 7);
}

TEST_F(CliTest, BenchEvenWindowIsUsageError) {
  WritePgmFile(P("one.pgm"), GrayImage(8, 8, 90));
  EXPECT_EQ(RunCli("bench " + P("one.pgm") + " --windows 3,4 --out " + P("r.csv")).exit_code, 2);
  EXPECT_FALSE(fs::exists(P("r.csv")));
}

TEST_F(CliTest, BenchMissingInputWritesNothing) {
  WritePgmFile(P("one.pgm"), GrayImage(8, 8, 90));
  EXPECT_EQ(RunCli("bench " + P("one.pgm") + " " + P("two.pgm") + " --out " + P("r.csv")).exit_code, 2);
  EXPECT_FALSE(fs::exists(P("r.csv")));
}

TEST_F(CliTest, GenPatternAndCorpus) {
  ASSERT_EQ(RunCli("gen --pattern flat --width 5 --height 4 --value 33 --out " + P("f.pgm")).exit_code, 0);
  EXPECT_EQ(ReadPgmFile(P("f.pgm")), GrayImage(5, 4, 33));
  ASSERT_EQ(RunCli("gen --corpus " + P("corpus") + " --size 32").exit_code, 0);
  for (const char* id : {"checkerboard", "steps", "gradient"}) {
    const GrayImage img = ReadPgmFile(dir_ / "corpus" / (std::string(id) + ".pgm"));
    EXPECT_EQ(img.width(), 32);
  }
  EXPECT_EQ(RunCli("gen --pattern plaid --out " + P("x.pgm")).exit_code, 2);
}

}  // namespace
}  // namespace iqrdenoise
