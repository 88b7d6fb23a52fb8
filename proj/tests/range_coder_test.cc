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

#include "pvq/range_coder.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace pvq {
namespace {

std::vector<uint32_t> RandomCdf(std::mt19937_64& rng, int symbols) {
  // Random positive weights scaled to kProbTotal with every symbol >= 1.
  std::uniform_int_distribution<uint32_t> dist(1, 1000);
  std::vector<uint64_t> w(symbols);
  uint64_t sum = 0;
  for (auto& v : w) sum += (v = dist(rng));
  std::vector<uint32_t> cdf(symbols + 1, 0);
  const uint64_t spare = kProbTotal - symbols;
  uint64_t acc = 0;
  for (int s = 0; s < symbols; ++s) {
    acc += w[s];
    cdf[s + 1] = static_cast<uint32_t>(s + 1 + acc * spare / sum);
  }
  return cdf;
}

TEST(RangeCoderTest, UniformThreeSymbols) {
  const std::vector<uint32_t> cdf{0, 10923, 21846, kProbTotal};
  RangeEncoder enc;
  for (int s : {0, 1, 2}) enc.EncodeSymbol(cdf, s);
  const std::vector<uint8_t> bytes = enc.Finish();
  RangeDecoder dec(bytes);
  for (int s : {0, 1, 2}) EXPECT_EQ(dec.DecodeSymbol(cdf), s);
  EXPECT_EQ(dec.position(), bytes.size());
  EXPECT_FALSE(dec.corrupt());
}

TEST(RangeCoderTest, RandomSymbolsUnderRandomCdfs) {
  std::mt19937_64 rng(61);
  std::vector<std::vector<uint32_t>> cdfs;
  for (int i = 0; i < 64; ++i) {
    cdfs.push_back(RandomCdf(rng, 2 + static_cast<int>(rng() % 300)));
  }
  cdfs.push_back({0, 1, kProbTotal});
  cdfs.push_back({0, kProbTotal - 1, kProbTotal});
  std::vector<std::pair<int, int>> seq;
  RangeEncoder enc;
  for (int i = 0; i < 100000; ++i) {
    const int c = static_cast<int>(rng() % cdfs.size());
    const int s = static_cast<int>(rng() % (cdfs[c].size() - 1));
    seq.emplace_back(c, s);
    enc.EncodeSymbol(cdfs[c], s);
    if (i % 7 == 0) enc.EncodeBits(static_cast<uint32_t>(i & 0x1F), 5);
  }
  const std::vector<uint8_t> bytes = enc.Finish();
  RangeDecoder dec(bytes);
  for (size_t i = 0; i < seq.size(); ++i) {
    ASSERT_EQ(dec.DecodeSymbol(cdfs[seq[i].first]), seq[i].second);
    if (i % 7 == 0) ASSERT_EQ(dec.DecodeBits(5), i & 0x1F);
  }
  EXPECT_EQ(dec.position(), bytes.size());
  EXPECT_FALSE(dec.corrupt());
}

TEST(RangeCoderTest, RateApproachesEntropy) {
  const std::vector<uint32_t> cdf{0, 16384, 24576, 28672, 30720, kProbTotal};
  double entropy = 0;
  for (size_t s = 0; s + 1 < cdf.size(); ++s) {
    const double p = static_cast<double>(cdf[s + 1] - cdf[s]) / kProbTotal;
    entropy -= p * std::log2(p);
  }
  std::mt19937_64 rng(62);
  std::uniform_int_distribution<uint32_t> dist(0, kProbTotal - 1);
  RangeEncoder enc;
  const int count = 1000000;
  for (int i = 0; i < count; ++i) {
    const uint32_t u = dist(rng);
    int s = 0;
    while (cdf[s + 1] <= u) ++s;
    enc.EncodeSymbol(cdf, s);
  }
  const double bits = 8.0 * enc.Finish().size();
  EXPECT_NEAR(bits / count, entropy, 0.01 * entropy);
}

TEST(RangeCoderTest, RawBits) {
  std::mt19937_64 rng(63);
  std::vector<std::pair<uint32_t, int>> values;
  RangeEncoder enc;
  for (int i = 0; i < 5000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const uint32_t v = static_cast<uint32_t>(rng()) & ((1u << n) - 1);
    values.emplace_back(v, n);
    enc.EncodeBits(v, n);
  }
  const std::vector<uint8_t> bytes = enc.Finish();
  RangeDecoder dec(bytes);
  for (auto [v, n] : values) ASSERT_EQ(dec.DecodeBits(n), v);
  EXPECT_EQ(dec.position(), bytes.size());
}

TEST(RangeCoderTest, Deterministic) {
  const std::vector<uint32_t> cdf{0, 100, 20000, kProbTotal};
  auto run = [&] {
    RangeEncoder enc;
    for (int i = 0; i < 1000; ++i) enc.EncodeSymbol(cdf, (i * 7) % 3);
    return enc.Finish();
  };
  EXPECT_EQ(run(), run());
}

TEST(RangeCoderTest, EmptyStream) {
  RangeEncoder enc;
  const std::vector<uint8_t> bytes = enc.Finish();
  RangeDecoder dec(bytes);
  EXPECT_EQ(dec.position(), bytes.size());
  EXPECT_FALSE(dec.corrupt());
}

TEST(RangeCoderTest, TruncationIsDetected) {
  const std::vector<uint32_t> cdf{0, 16384, kProbTotal};
  RangeEncoder enc;
  for (int i = 0; i < 4000; ++i) enc.EncodeSymbol(cdf, i % 2);
  std::vector<uint8_t> bytes = enc.Finish();
  bytes.resize(bytes.size() / 2);
  RangeDecoder dec(bytes);
  for (int i = 0; i < 4000; ++i) dec.DecodeSymbol(cdf);
  EXPECT_TRUE(dec.overrun());
  EXPECT_TRUE(dec.corrupt());
}

TEST(RangeCoderTest, Errors) {
  const std::vector<uint32_t> cdf{0, 16384, kProbTotal};
  RangeEncoder enc;
  EXPECT_THROW(enc.EncodeSymbol(cdf, 2), std::out_of_range);
  EXPECT_THROW(enc.EncodeSymbol(cdf, -1), std::out_of_range);
  EXPECT_THROW(enc.EncodeBits(0, 0), std::invalid_argument);
  EXPECT_THROW(enc.EncodeBits(0, 17), std::invalid_argument);
  EXPECT_THROW(ValidateCdf(std::vector<uint32_t>{0, 5, 5, kProbTotal}),
               std::invalid_argument);
  EXPECT_THROW(ValidateCdf(std::vector<uint32_t>{0, 5, 100}),
               std::invalid_argument);
  EXPECT_NO_THROW(ValidateCdf(cdf));
}

}  // namespace
}  // namespace pvq
