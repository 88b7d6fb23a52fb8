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

#include "pvq/entropy.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "pvq/codebook.h"
#include "test_util.h"

namespace pvq {
namespace {

// Symbol sink that records what would be coded.
struct Recorder {
  std::vector<int> symbols;
  std::vector<int> alphabet_sizes;
  int raw_bits = 0;

  void EncodeSymbol(Cdf cdf, int symbol) {
    symbols.push_back(symbol);
    alphabet_sizes.push_back(static_cast<int>(cdf.size()) - 1);
  }
  void EncodeBits(uint32_t, int nbits) { raw_bits += nbits; }
};

PulseVector RandomPulses(std::mt19937_64& rng, int n, int k) {
  std::vector<int32_t> y(n, 0);
  for (int p = 0; p < k; ++p) {
    // Skew towards low indices, as in real bands.
    const int i = static_cast<int>(std::min<uint64_t>(rng() % n, rng() % n));
    y[i] += (y[i] == 0 ? (rng() & 1 ? 1 : -1) : (y[i] > 0 ? 1 : -1));
  }
  return PulseVector(std::move(y), k);
}

TEST(ExpectationTest, Examples) {
  EXPECT_EQ(MagnitudeExpectationQ8(kOneQ8, 5, 16), 80u);  // 0.3125
  EXPECT_EQ(RunExpectationQ8(kOneQ8, 1, 8), 8u * kOneQ8);
  EXPECT_EQ(MagnitudeExpectationQ8(kOneQ8, 1, 1 << 20), 1u);
}

TEST(ZigZagTest, Mapping) {
  EXPECT_EQ(ZigZag(0), 0u);
  EXPECT_EQ(ZigZag(-1), 1u);
  EXPECT_EQ(ZigZag(1), 2u);
  EXPECT_EQ(ZigZag(-3), 5u);
  for (int32_t v : {0, 1, -1, 7, -1000, 1 << 30, -(1 << 30)}) {
    EXPECT_EQ(UnZigZag(ZigZag(v)), v);
  }
}

TEST(GeometricCdfTest, ValidAndGeometric) {
  for (uint32_t e : {1u, 40u, 256u, 1000u, 20000u, 61440u}) {
    for (int count : {2, 3, 17, 100, kMaxAlphabet}) {
      std::vector<uint32_t> cdf(count + 1);
      BuildGeometricCdf(e, count, cdf);
      EXPECT_NO_THROW(ValidateCdf(cdf));
    }
  }
  // E = 3: successive frequencies shrink by 3/4.
  std::vector<uint32_t> cdf(41);
  BuildGeometricCdf(3 * kOneQ8, 40, cdf);
  for (int s = 1; s < 10; ++s) {
    const double ratio =
        static_cast<double>(cdf[s + 1] - cdf[s]) / (cdf[s] - cdf[s - 1]);
    EXPECT_NEAR(ratio, 0.75, 0.01);
  }
  EXPECT_THROW(BuildGeometricCdf(256, 0, cdf), std::invalid_argument);
  EXPECT_THROW(BuildGeometricCdf(256, 41, cdf), std::invalid_argument);
}

TEST(AlphabetTest, CapAndBound) {
  EXPECT_EQ(ChooseAlphabet(kOneQ8, kUnbounded).count, 18);
  EXPECT_TRUE(ChooseAlphabet(kOneQ8, kUnbounded).escape);
  EXPECT_EQ(ChooseAlphabet(1000 * kOneQ8, kUnbounded).count, kMaxAlphabet);
  EXPECT_EQ(ChooseAlphabet(kOneQ8, 5).count, 6);
  EXPECT_FALSE(ChooseAlphabet(kOneQ8, 5).escape);
  EXPECT_EQ(ChooseAlphabet(kOneQ8, 0).count, 1);
}

TEST(AdaptiveScaleTest, MovingAverage) {
  AdaptiveScale s;
  EXPECT_EQ(s.q8(), kOneQ8);
  s.Observe(17 * kOneQ8);
  EXPECT_EQ(s.q8(), kOneQ8 + 16 * kOneQ8 / 16);
  // Integer steps stall once the gap is under one rate unit.
  for (int i = 0; i < 1000; ++i) s.Observe(0);
  EXPECT_EQ(s.q8(), 15);
  s.Observe(0);
  EXPECT_EQ(s.q8(), 15);
  AdaptiveScale floor(kMinScaleQ8);
  floor.Observe(0);
  EXPECT_EQ(floor.q8(), kMinScaleQ8);
  for (int i = 0; i < 2000; ++i) s.Observe(int64_t{1} << 40);
  EXPECT_LE(s.q8(), kMaxScaleQ8);
}

TEST(AdaptiveLaplaceTest, RoundTripsSmallAndEscapedValues) {
  const std::vector<int32_t> values{0,     -3,      5,          100000, -7, 0,
                                    65535, 1 << 30, -(1 << 30), 2,      1};
  AdaptiveLaplace enc_model;
  RangeEncoder enc;
  for (int32_t v : values) enc_model.EncodeSigned(enc, v);
  enc_model.Encode(enc, kUnbounded);
  const std::vector<uint8_t> bytes = enc.Finish();
  AdaptiveLaplace dec_model;
  RangeDecoder dec(bytes);
  for (int32_t v : values) EXPECT_EQ(dec_model.DecodeSigned(dec), v);
  EXPECT_EQ(dec_model.Decode(dec), kUnbounded);
  EXPECT_EQ(dec.position(), bytes.size());
  EXPECT_EQ(enc_model, dec_model);
}

TEST(AdaptiveLaplaceTest, RateNearEmpiricalEntropy) {
  std::mt19937_64 rng(71);
  std::geometric_distribution<uint32_t> geo(0.25);  // mean 3
  std::vector<uint32_t> values(10000);
  std::map<uint32_t, int> histogram;
  for (uint32_t& v : values) ++histogram[v = geo(rng)];
  double entropy_bits = 0;
  for (auto [v, c] : histogram) {
    entropy_bits -= c * std::log2(static_cast<double>(c) / values.size());
  }
  AdaptiveLaplace model;
  RangeEncoder enc;
  for (uint32_t v : values) model.Encode(enc, v);
  const std::vector<uint8_t> bytes = enc.Finish();
  EXPECT_LE(8.0 * bytes.size(), 1.05 * entropy_bits);

  AdaptiveLaplace dec_model;
  RangeDecoder dec(bytes);
  for (uint32_t v : values) ASSERT_EQ(dec_model.Decode(dec), v);
  EXPECT_EQ(dec.position(), bytes.size());
}

TEST(AdaptiveBitTest, RoundTripAndLearning) {
  std::mt19937_64 rng(72);
  std::vector<bool> bits(20000);
  for (size_t i = 0; i < bits.size(); ++i) bits[i] = rng() % 10 == 0;
  AdaptiveBit model;
  RangeEncoder enc;
  for (bool b : bits) model.Encode(enc, b);
  const std::vector<uint8_t> bytes = enc.Finish();
  // Entropy of p = 0.1 is 0.469 bits.
  EXPECT_LT(8.0 * bytes.size() / bits.size(), 0.52);
  AdaptiveBit dec_model;
  RangeDecoder dec(bytes);
  for (bool b : bits) ASSERT_EQ(dec_model.Decode(dec), b);
  EXPECT_EQ(model, dec_model);
}

TEST(PulseCodingTest, SinglePulseIsRunAndSign) {
  PulseModels models;
  Recorder rec;
  std::vector<int32_t> y(16, 0);
  y[15] = -1;
  EncodePulseVector(rec, models, y, 1);
  ASSERT_EQ(rec.symbols.size(), 1u);
  EXPECT_EQ(rec.symbols[0], 15);
  EXPECT_EQ(rec.alphabet_sizes[0], 16);
  EXPECT_EQ(rec.raw_bits, 1);
}

TEST(PulseCodingTest, LastMagnitudeIsInferred) {
  PulseModels models;
  Recorder rec;
  EncodePulseVector(rec, models, std::vector<int32_t>{0, 0, 3}, 3);
  EXPECT_EQ(rec.symbols, (std::vector<int>{0, 0}));
  EXPECT_EQ(rec.raw_bits, 1);

  const std::vector<int32_t> y{0, 0, 3};
  RangeEncoder enc;
  PulseModels enc_models;
  EncodePulseVector(enc, enc_models, y, 3);
  const std::vector<uint8_t> bytes = enc.Finish();
  RangeDecoder dec(bytes);
  PulseModels dec_models;
  EXPECT_EQ(DecodePulseVector(dec, dec_models, 3, 3), PulseVector(y, 3));
}

TEST(PulseCodingTest, SwitchesToRunModeAtOnePulse) {
  PulseModels models;
  Recorder rec;
  // K = 3: magnitudes 2 (sign), then one pulse left -> run of 3 to index 4.
  EncodePulseVector(rec, models, std::vector<int32_t>{2, 0, 0, 0, -1, 0}, 3);
  EXPECT_EQ(rec.symbols, (std::vector<int>{2, 3}));
  EXPECT_EQ(rec.alphabet_sizes, (std::vector<int>{4, 5}));
  EXPECT_EQ(rec.raw_bits, 2);
}

TEST(PulseCodingTest, RandomRoundTripWithModelLockstep) {
  std::mt19937_64 rng(73);
  struct Item {
    PulseVector y;
    PulseModels after;
  };
  std::vector<Item> items;
  PulseModels enc_models;
  RangeEncoder enc;
  for (int n : {15, 16, 63}) {
    for (int i = 0; i < 1000; ++i) {
      const int k = 1 + static_cast<int>(rng() % 32);
      PulseVector y = RandomPulses(rng, n, k);
      EncodePulseVector(enc, enc_models, y.coeffs(), k);
      items.push_back({std::move(y), enc_models});
    }
  }
  const std::vector<uint8_t> bytes = enc.Finish();
  RangeDecoder dec(bytes);
  PulseModels dec_models;
  for (const Item& item : items) {
    ASSERT_EQ(
        DecodePulseVector(dec, dec_models, item.y.pulses(), item.y.size()),
        item.y);
    ASSERT_EQ(dec_models, item.after);
  }
  EXPECT_EQ(dec.position(), bytes.size());
  EXPECT_FALSE(dec.corrupt());
}

TEST(PulseCodingTest, BitCounterTracksRealRate) {
  std::mt19937_64 rng(74);
  PulseModels a, b;
  RangeEncoder enc;
  BitCounter counter;
  for (int i = 0; i < 2000; ++i) {
    const PulseVector y =
        RandomPulses(rng, 16, 1 + static_cast<int>(rng() % 12));
    EncodePulseVector(enc, a, y.coeffs(), y.pulses());
    EncodePulseVector(counter, b, y.coeffs(), y.pulses());
  }
  const double real = 8.0 * enc.Finish().size();
  EXPECT_NEAR(counter.bits(), real, 0.01 * real + 32);
}

TEST(PulseCodingTest, GarbageNeverBreaksTheL1Invariant) {
  std::mt19937_64 rng(75);
  std::vector<uint8_t> garbage(4096);
  for (uint8_t& b : garbage) b = static_cast<uint8_t>(rng());
  RangeDecoder dec(garbage);
  PulseModels models;
  for (int i = 0; i < 500 && !dec.overrun(); ++i) {
    const int k = 1 + i % 40;
    const PulseVector y = DecodePulseVector(dec, models, k, 1 + i % 63);
    int64_t l1 = 0;
    for (int32_t c : y.coeffs()) l1 += std::abs(c);
    EXPECT_EQ(l1, k);
  }
}

TEST(PulseCodingTest, Errors) {
  PulseModels models;
  RangeEncoder enc;
  EXPECT_THROW(EncodePulseVector(enc, models, std::vector<int32_t>{1, 1}, 3),
               std::invalid_argument);
  EXPECT_THROW(EncodePulseVector(enc, models, std::vector<int32_t>{0, 0}, 0),
               std::invalid_argument);
}

}  // namespace
}  // namespace pvq
