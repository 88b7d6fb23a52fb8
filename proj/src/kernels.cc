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

#include "pvq/kernels.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "pvq/bands.h"
#include "pvq/transform.h"

namespace pvq {
namespace {

int BlocksFor(int pixels, int block_size) {
  return (pixels + block_size - 1) / block_size;
}

CoefficientPlane MakePlane(const Image& image, int block_size) {
  if (!IsSupportedBlockSize(block_size)) {
    throw std::invalid_argument("unsupported block size");
  }
  if (image.width <= 0 || image.height <= 0) {
    throw std::invalid_argument("empty image");
  }
  return CoefficientPlane(block_size, BlocksFor(image.width, block_size),
                          BlocksFor(image.height, block_size));
}

void ForwardBlock(const Image& image, CoefficientPlane& plane, int index) {
  const int n = plane.block_size;
  const int x0 = (index % plane.blocks_x) * n;
  const int y0 = (index / plane.blocks_x) * n;
  std::array<double, 256> pixels;
  for (int y = 0; y < n; ++y) {
    const int sy = std::min(y0 + y, image.height - 1);
    for (int x = 0; x < n; ++x) {
      const int sx = std::min(x0 + x, image.width - 1);
      pixels[y * n + x] = image.at(sx, sy) - 128.0;
    }
  }
  ForwardDct2(n, std::span<const double>(pixels.data(), n * n),
              plane.block(index));
}

void InverseBlock(const CoefficientPlane& plane, int index, Image& image) {
  const int n = plane.block_size;
  const int x0 = (index % plane.blocks_x) * n;
  const int y0 = (index / plane.blocks_x) * n;
  std::array<double, 256> pixels;
  InverseDct2(n, plane.block(index), std::span<double>(pixels.data(), n * n));
  for (int y = 0; y < n && y0 + y < image.height; ++y) {
    for (int x = 0; x < n && x0 + x < image.width; ++x) {
      const long v = std::lround(pixels[y * n + x] + 128.0);
      image.at(x0 + x, y0 + y) = static_cast<uint8_t>(std::clamp(v, 0L, 255L));
    }
  }
}

void CheckInverseArgs(const CoefficientPlane& plane, int width, int height) {
  if (width <= 0 || height <= 0 || width > plane.blocks_x * plane.block_size ||
      height > plane.blocks_y * plane.block_size) {
    throw std::invalid_argument("inverse DCT: bad output dimensions");
  }
}

}  // namespace

CoefficientPlane ForwardDctPlane(const Image& image, int block_size) {
  CoefficientPlane plane = MakePlane(image, block_size);
  const int blocks = plane.num_blocks();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < blocks; ++i) ForwardBlock(image, plane, i);
  return plane;
}

CoefficientPlane ForwardDctPlaneSerial(const Image& image, int block_size) {
  CoefficientPlane plane = MakePlane(image, block_size);
  for (int i = 0; i < plane.num_blocks(); ++i) ForwardBlock(image, plane, i);
  return plane;
}

Image InverseDctPlane(const CoefficientPlane& plane, int width, int height) {
  CheckInverseArgs(plane, width, height);
  Image image(width, height);
  const int blocks = plane.num_blocks();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < blocks; ++i) InverseBlock(plane, i, image);
  return image;
}

Image InverseDctPlaneSerial(const CoefficientPlane& plane, int width,
                            int height) {
  CheckInverseArgs(plane, width, height);
  Image image(width, height);
  for (int i = 0; i < plane.num_blocks(); ++i) InverseBlock(plane, i, image);
  return image;
}

}  // namespace pvq
