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

#include <stdexcept>

namespace pvq {
namespace {

void AddRegion(int stride, int row0, int col0, int extent,
               std::vector<std::vector<int>>& bands) {
  std::vector<int> band;
  band.reserve(extent * extent);
  for (int r = row0; r < row0 + extent; ++r) {
    for (int c = col0; c < col0 + extent; ++c) band.push_back(r * stride + c);
  }
  bands.push_back(std::move(band));
}

// The low-frequency corner of size `extent` is split like a smaller block;
// the remaining three quadrants each become one band.
void BuildBands(int stride, int extent, std::vector<std::vector<int>>& bands) {
  if (extent == 4) {
    std::vector<int> band;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        if (r != 0 || c != 0) band.push_back(r * stride + c);
      }
    }
    bands.push_back(std::move(band));
    return;
  }
  const int half = extent / 2;
  BuildBands(stride, half, bands);
  AddRegion(stride, 0, half, half, bands);
  AddRegion(stride, half, 0, half, bands);
  AddRegion(stride, half, half, half, bands);
}

BandLayout MakeLayout(int size) {
  BandLayout layout;
  layout.block_size = size;
  BuildBands(size, size, layout.bands);
  return layout;
}

void CheckBand(const BandLayout& layout, int band, size_t coeffs) {
  if (band < 0 || band >= layout.num_bands()) {
    throw std::out_of_range("band index out of range");
  }
  if (coeffs != static_cast<size_t>(layout.block_size * layout.block_size)) {
    throw std::invalid_argument("coefficient count does not match layout");
  }
}

}  // namespace

const BandLayout& GetBandLayout(int block_size) {
  static const BandLayout k4 = MakeLayout(4);
  static const BandLayout k8 = MakeLayout(8);
  static const BandLayout k16 = MakeLayout(16);
  switch (block_size) {
    case 4:
      return k4;
    case 8:
      return k8;
    case 16:
      return k16;
    default:
      throw std::invalid_argument("unsupported block size");
  }
}

std::vector<double> ExtractBand(std::span<const double> coeffs,
                                const BandLayout& layout, int band) {
  CheckBand(layout, band, coeffs.size());
  const auto& idx = layout.bands[band];
  std::vector<double> out(idx.size());
  for (size_t i = 0; i < idx.size(); ++i) out[i] = coeffs[idx[i]];
  return out;
}

void ScatterBand(std::span<const double> values, const BandLayout& layout,
                 int band, std::span<double> coeffs) {
  CheckBand(layout, band, coeffs.size());
  const auto& idx = layout.bands[band];
  if (values.size() != idx.size()) {
    throw std::invalid_argument("scatter: band size mismatch");
  }
  for (size_t i = 0; i < idx.size(); ++i) coeffs[idx[i]] = values[i];
}

}  // namespace pvq
