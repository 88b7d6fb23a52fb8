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

#ifndef PVQ_KERNELS_H_
#define PVQ_KERNELS_H_

// Frame-level transform kernels. Each has an OpenMP version (parallel over
// block rows) and a serial reference; both run the same per-block code and
// produce bit-identical output.

#include <span>
#include <vector>

#include "pvq/image.h"

namespace pvq {

// DCT coefficients of a frame padded to whole blocks. Blocks are stored in
// raster order, each block's coefficients contiguous and row-major.
struct CoefficientPlane {
  int block_size = 0;
  int blocks_x = 0;
  int blocks_y = 0;
  std::vector<double> coeffs;

  CoefficientPlane() = default;
  CoefficientPlane(int size, int bx, int by)
      : block_size(size),
        blocks_x(bx),
        blocks_y(by),
        coeffs(static_cast<size_t>(size) * size * bx * by, 0.0) {}

  int block_area() const { return block_size * block_size; }
  int num_blocks() const { return blocks_x * blocks_y; }

  std::span<double> block(int index) {
    return std::span<double>(coeffs).subspan(
        static_cast<size_t>(index) * block_area(), block_area());
  }
  std::span<const double> block(int index) const {
    return std::span<const double>(coeffs).subspan(
        static_cast<size_t>(index) * block_area(), block_area());
  }
};

// Pixels are level-shifted by -128; partial blocks at the right and bottom
// edges are filled by edge replication.
CoefficientPlane ForwardDctPlane(const Image& image, int block_size);
CoefficientPlane ForwardDctPlaneSerial(const Image& image, int block_size);

// Inverse of the above, rounded and clamped to [0, 255], cropped to
// width x height.
Image InverseDctPlane(const CoefficientPlane& plane, int width, int height);
Image InverseDctPlaneSerial(const CoefficientPlane& plane, int width,
                            int height);

}  // namespace pvq

#endif  // PVQ_KERNELS_H_
