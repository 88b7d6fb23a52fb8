// Copyright 2026 The pvq Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the pvq binary and checks outputs and exit codes.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "pvq/codec.h"
#include "pvq/image.h"
#include "pvq/synthetic.h"

namespace pvq {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun Exec(const std::string& args) {
  const std::string cmd =
      std::string(PVQ_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[512];
  while (fgets(buf, sizeof(buf), pipe) != nullptr) r.out += buf;
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ =
        fs::temp_directory_path() /
        ("pvq_cli_test_" +
         std::string(
             ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    image_ = SyntheticCorpus()[4].image;
    WritePgm(dir_ / "in.pgm", image_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string P(const std::string& name) const {
    return (dir_ / name).string();
  }

  fs::path dir_;
  Image image_;
};

TEST_F(CliTest, EncodeDecodeMatchesLibrary) {
  ASSERT_EQ(Exec("encode --input " + P("in.pgm") + " --output " + P("a.pvq") +
                 " --qg 10 --block 16 --robust --lambda 5")
                .status,
            0);
  EncoderConfig cfg;
  cfg.qg = 10;
  cfg.block_size = 16;
  cfg.robust = true;
  cfg.lambda = 5;
  const EncodeResult enc = EncodeImage(image_, nullptr, cfg);
  EXPECT_EQ(ReadFileBytes(P("a.pvq")), enc.bitstream);
  ASSERT_EQ(
      Exec("decode --input " + P("a.pvq") + " --output " + P("a.pgm")).status,
      0);
  EXPECT_EQ(ReadImage(P("a.pgm")), enc.reconstruction);
}

TEST_F(CliTest, ReferenceAndScalar) {
  ASSERT_EQ(Exec("encode --input " + P("in.pgm") + " --output " + P("r.pvq") +
                 " --qg 8 --ref " + P("in.pgm") + " --mode scalar --no-masking")
                .status,
            0);
  EXPECT_EQ(Exec("decode --input " + P("r.pvq") + " --output " + P("r.pgm") +
                 " --ref " + P("in.pgm"))
                .status,
            0);
  // Stream needs its reference.
  EXPECT_EQ(
      Exec("decode --input " + P("r.pvq") + " --output " + P("x.pgm")).status,
      1);
}

TEST_F(CliTest, Metrics) {
  const CliRun r = Exec("metrics --a " + P("in.pgm") + " --b " + P("in.pgm"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "psnr=99.0000,ssim=1.000000\n");
}

TEST_F(CliTest, Simulate) {
  const CliRun r = Exec("simulate --n 8 --k 16 --trials 500 --seed 7");
  EXPECT_EQ(r.status, 0);
  int commas = 0;
  for (char c : r.out) commas += c == ',';
  EXPECT_EQ(commas, 6);
  EXPECT_EQ(r.out.rfind("8,16,500,7,", 0), 0u);
}

TEST_F(CliTest, SweepAndGenCorpus) {
  ASSERT_EQ(Exec("gen-corpus --out " + P("corpus")).status, 0);
  EXPECT_EQ(ReadImage(P("corpus/shapes.pgm")), image_);
  ASSERT_EQ(Exec("sweep --corpus " + P("corpus") +
                 " --qg 8,16 --modes pvq,scalar --out " + P("rd.csv"))
                .status,
            0);
  const std::vector<uint8_t> csv = ReadFileBytes(P("rd.csv"));
  int lines = 0;
  for (uint8_t c : csv) lines += c == '\n';
  EXPECT_EQ(lines, 1 + 8 * 2 * 2);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Exec("").status, 1);
  EXPECT_EQ(Exec("bogus").status, 1);
  EXPECT_EQ(Exec("encode --input " + P("in.pgm")).status, 1);
  EXPECT_EQ(Exec("encode --input " + P("in.pgm") + " --output " + P("o") +
                 " --qg 8 --block 5")
                .status,
            1);
  EXPECT_EQ(
      Exec("encode --input " + P("in.pgm") + " --output " + P("o") + " --qg 0")
          .status,
      1);
  EXPECT_EQ(Exec("simulate --n 1 --k 4").status, 1);
  EXPECT_EQ(Exec("encode --input " + P("missing.pgm") + " --output " + P("o") +
                 " --qg 8")
                .status,
            2);
  EXPECT_EQ(
      Exec("metrics --a " + P("in.pgm") + " --b " + P("missing.pgm")).status,
      2);
  EXPECT_EQ(Exec("sweep --corpus " + P("nope") + " --qg 8 --modes pvq --out " +
                 P("x.csv"))
                .status,
            2);

  ASSERT_EQ(Exec("encode --input " + P("in.pgm") + " --output " + P("a.pvq") +
                 " --qg 8")
                .status,
            0);
  std::vector<uint8_t> bytes = ReadFileBytes(P("a.pvq"));
  bytes.resize(bytes.size() - 7);
  WriteFileBytes(P("cut.pvq"), bytes);
  EXPECT_EQ(
      Exec("decode --input " + P("cut.pvq") + " --output " + P("o.pgm")).status,
      3);
  EXPECT_EQ(
      Exec("decode --input " + P("in.pgm") + " --output " + P("o.pgm")).status,
      3);
  EXPECT_EQ(Exec("--help").status, 0);
}

}  // namespace
}  // namespace pvq
