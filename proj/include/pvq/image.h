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

#ifndef PVQ_IMAGE_H_
#define PVQ_IMAGE_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace pvq {

// 8-bit grayscale frame, row-major.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> pixels;

  Image() = default;
  Image(int w, int h, uint8_t fill = 0)
      : width(w), height(h), pixels(static_cast<size_t>(w) * h, fill) {}

  uint8_t at(int x, int y) const {
    return pixels[static_cast<size_t>(y) * width + x];
  }
  uint8_t& at(int x, int y) {
    return pixels[static_cast<size_t>(y) * width + x];
  }
  bool empty() const { return pixels.empty(); }

  bool operator==(const Image&) const = default;
};

// Binary PGM (P5) with maxval <= 255. Comments in the header are skipped.
Image ParsePgm(std::span<const uint8_t> data);
std::vector<uint8_t> EncodePgm(const Image& image);

// Luma plane of the first frame of a 4:2:0 or mono 8-bit Y4M stream.
Image ParseY4mLuma(std::span<const uint8_t> data);

std::vector<uint8_t> ReadFileBytes(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const uint8_t> bytes);

// Reads a PGM or Y4M file, chosen by its magic bytes. Throws IoError.
Image ReadImage(const std::filesystem::path& path);
void WritePgm(const std::filesystem::path& path, const Image& image);

}  // namespace pvq

#endif  // PVQ_IMAGE_H_
