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

#ifndef PVQ_BANDS_H_
#define PVQ_BANDS_H_

#include <span>
#include <vector>

namespace pvq {

// Partition of a block's AC coefficients into frequency bands. Indices are
// row-major positions in the block; DC (index 0) belongs to no band.
//   4x4:   one band of 15
//   8x8:   4x4 corner, then horizontal, vertical, diagonal 4x4 quadrants
//   16x16: the 8x8 layout in the corner, then three 8x8 quadrants
struct BandLayout {
  int block_size = 0;
  std::vector<std::vector<int>> bands;

  int num_bands() const { return static_cast<int>(bands.size()); }
  int band_size(int band) const {
    return static_cast<int>(bands.at(band).size());
  }
};

// Shared immutable layout. Throws std::invalid_argument unless size is
// 4, 8 or 16.
const BandLayout& GetBandLayout(int block_size);

inline bool IsSupportedBlockSize(int size) {
  return size == 4 || size == 8 || size == 16;
}

std::vector<double> ExtractBand(std::span<const double> coeffs,
                                const BandLayout& layout, int band);

void ScatterBand(std::span<const double> values, const BandLayout& layout,
                 int band, std::span<double> coeffs);

}  // namespace pvq

#endif  // PVQ_BANDS_H_
