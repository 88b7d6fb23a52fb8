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

#include "pvq/bands.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace pvq {
namespace {

std::vector<int> Sizes(const BandLayout& layout) {
  std::vector<int> sizes;
  for (int b = 0; b < layout.num_bands(); ++b) {
    sizes.push_back(layout.band_size(b));
  }
  return sizes;
}

std::vector<int> Region(int size, int x0, int y0, int w) {
  std::vector<int> idx;
  for (int y = y0; y < y0 + w; ++y) {
    for (int x = x0; x < x0 + w; ++x) idx.push_back(y * size + x);
  }
  return idx;
}

TEST(BandLayoutTest, Sizes) {
  EXPECT_EQ(Sizes(GetBandLayout(4)), (std::vector<int>{15}));
  EXPECT_EQ(Sizes(GetBandLayout(8)), (std::vector<int>{15, 16, 16, 16}));
  EXPECT_EQ(Sizes(GetBandLayout(16)),
            (std::vector<int>{15, 16, 16, 16, 64, 64, 64}));
  EXPECT_THROW(GetBandLayout(32), std::invalid_argument);
  EXPECT_THROW(GetBandLayout(0), std::invalid_argument);
}

TEST(BandLayoutTest, PartitionsAcCoefficients) {
  for (int size : {4, 8, 16}) {
    const BandLayout& layout = GetBandLayout(size);
    EXPECT_EQ(layout.block_size, size);
    std::vector<int> all;
    for (const auto& band : layout.bands) {
      all.insert(all.end(), band.begin(), band.end());
    }
    std::sort(all.begin(), all.end());
    std::vector<int> expected(size * size - 1);
    std::iota(expected.begin(), expected.end(), 1);
    EXPECT_EQ(all, expected);
  }
}

TEST(BandLayoutTest, RegionsFollowTheRecursion) {
  const BandLayout& l8 = GetBandLayout(8);
  EXPECT_EQ(l8.bands[1], Region(8, 4, 0, 4));
  EXPECT_EQ(l8.bands[2], Region(8, 0, 4, 4));
  EXPECT_EQ(l8.bands[3], Region(8, 4, 4, 4));
  std::vector<int> corner = Region(8, 0, 0, 4);
  corner.erase(corner.begin());
  EXPECT_EQ(l8.bands[0], corner);

  const BandLayout& l16 = GetBandLayout(16);
  EXPECT_EQ(l16.bands[4], Region(16, 8, 0, 8));
  EXPECT_EQ(l16.bands[5], Region(16, 0, 8, 8));
  EXPECT_EQ(l16.bands[6], Region(16, 8, 8, 8));
  EXPECT_EQ(l16.bands[3], Region(16, 4, 4, 4));
}

TEST(BandLayoutTest, SharedInstance) {
  EXPECT_EQ(&GetBandLayout(8), &GetBandLayout(8));
}

TEST(ExtractScatterTest, ExtractSkipsDc) {
  std::vector<double> block(16);
  std::iota(block.begin(), block.end(), 0.0);
  const std::vector<double> band = ExtractBand(block, GetBandLayout(4), 0);
  ASSERT_EQ(band.size(), 15u);
  for (int i = 0; i < 15; ++i) EXPECT_EQ(band[i], i + 1);
}

TEST(ExtractScatterTest, RoundTripAndPartition) {
  for (int size : {4, 8, 16}) {
    const BandLayout& layout = GetBandLayout(size);
    std::vector<double> block(size * size);
    std::iota(block.begin(), block.end(), 100.0);
    std::vector<double> rebuilt(size * size, 0.0);
    rebuilt[0] = block[0];
    std::vector<double> gathered{block[0]};
    for (int b = 0; b < layout.num_bands(); ++b) {
      const std::vector<double> v = ExtractBand(block, layout, b);
      gathered.insert(gathered.end(), v.begin(), v.end());
      ScatterBand(v, layout, b, rebuilt);
    }
    EXPECT_EQ(rebuilt, block);
    std::sort(gathered.begin(), gathered.end());
    EXPECT_EQ(gathered, block);
  }
}

TEST(ExtractScatterTest, ScatterZeroesOnlyTheBand) {
  const BandLayout& layout = GetBandLayout(8);
  std::vector<double> block(64, 1.0);
  ScatterBand(std::vector<double>(16, 0.0), layout, 2, block);
  for (int i = 0; i < 64; ++i) {
    const bool in_band =
        std::count(layout.bands[2].begin(), layout.bands[2].end(), i) > 0;
    EXPECT_EQ(block[i], in_band ? 0.0 : 1.0);
  }
}

TEST(ExtractScatterTest, ScattersToDifferentBandsCommute) {
  const BandLayout& layout = GetBandLayout(16);
  std::vector<double> a(256, 0.0), b(256, 0.0);
  const std::vector<double> u(64, 3.0), v(16, -2.0);
  ScatterBand(u, layout, 5, a);
  ScatterBand(v, layout, 1, a);
  ScatterBand(v, layout, 1, b);
  ScatterBand(u, layout, 5, b);
  EXPECT_EQ(a, b);
}

TEST(ExtractScatterTest, Errors) {
  std::vector<double> block(64);
  const BandLayout& layout = GetBandLayout(8);
  EXPECT_THROW(ExtractBand(block, layout, 4), std::out_of_range);
  EXPECT_THROW(ExtractBand(block, layout, -1), std::out_of_range);
  EXPECT_THROW(ExtractBand(std::vector<double>(16), layout, 0),
               std::invalid_argument);
  EXPECT_THROW(ScatterBand(std::vector<double>(15), layout, 1, block),
               std::invalid_argument);
}

}  // namespace
}  // namespace pvq
