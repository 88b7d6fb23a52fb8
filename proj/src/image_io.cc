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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <string>
#include <string_view>

#include "pvq/errors.h"
#include "pvq/image.h"

namespace pvq {
namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const uint8_t> data) : data_(data) {}

  // Next whitespace-delimited token, skipping '#' comments.
  std::string_view Token() {
    for (;;) {
      while (pos_ < data_.size() && std::isspace(data_[pos_])) ++pos_;
      if (pos_ < data_.size() && data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    const size_t start = pos_;
    while (pos_ < data_.size() && !std::isspace(data_[pos_])) ++pos_;
    return std::string_view(reinterpret_cast<const char*>(data_.data()) + start,
                            pos_ - start);
  }

  int Number() {
    const std::string_view tok = Token();
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw IoError("PGM: expected a number");
    }
    return value;
  }

  size_t pos() const { return pos_; }

 private:
  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

bool StartsWith(std::span<const uint8_t> data, std::string_view prefix) {
  return data.size() >= prefix.size() &&
         std::equal(prefix.begin(), prefix.end(), data.begin());
}

int ParseDimension(std::string_view tok) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data() + 1, tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value <= 0) {
    throw IoError("Y4M: bad dimension tag");
  }
  return value;
}

}  // namespace

Image ParsePgm(std::span<const uint8_t> data) {
  HeaderReader header(data);
  if (header.Token() != "P5") throw IoError("not a binary PGM (P5)");
  const int width = header.Number();
  const int height = header.Number();
  const int maxval = header.Number();
  if (width <= 0 || height <= 0) throw IoError("PGM: bad dimensions");
  if (maxval <= 0 || maxval > 255) throw IoError("PGM: only 8-bit supported");
  // Exactly one whitespace byte separates the header from the raster.
  const size_t start = header.pos() + 1;
  const size_t count = static_cast<size_t>(width) * height;
  if (data.size() < start + count) throw IoError("PGM: truncated raster");
  Image image(width, height);
  std::copy_n(data.begin() + start, count, image.pixels.begin());
  return image;
}

std::vector<uint8_t> EncodePgm(const Image& image) {
  const std::string header = "P5\n" + std::to_string(image.width) + " " +
                             std::to_string(image.height) + "\n255\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), image.pixels.begin(), image.pixels.end());
  return out;
}

Image ParseY4mLuma(std::span<const uint8_t> data) {
  if (!StartsWith(data, "YUV4MPEG2 ")) throw IoError("not a Y4M stream");
  size_t eol = 0;
  while (eol < data.size() && data[eol] != '\n') ++eol;
  if (eol == data.size()) throw IoError("Y4M: unterminated header");
  const std::string_view line(reinterpret_cast<const char*>(data.data()), eol);

  int width = 0;
  int height = 0;
  std::string_view colorspace = "420jpeg";
  size_t pos = 0;
  while (pos < line.size()) {
    size_t end = line.find(' ', pos);
    if (end == std::string_view::npos) end = line.size();
    const std::string_view tok = line.substr(pos, end - pos);
    if (!tok.empty()) {
      if (tok[0] == 'W') width = ParseDimension(tok);
      if (tok[0] == 'H') height = ParseDimension(tok);
      if (tok[0] == 'C') colorspace = tok.substr(1);
    }
    pos = end + 1;
  }
  if (width <= 0 || height <= 0) throw IoError("Y4M: missing W/H");
  const bool is_420 = colorspace == "420" || colorspace == "420jpeg" ||
                      colorspace == "420mpeg2" || colorspace == "420paldv";
  if (!is_420 && colorspace != "mono") {
    throw IoError("Y4M: only 8-bit 4:2:0 or mono supported");
  }

  size_t frame = eol + 1;
  if (!StartsWith(data.subspan(std::min(frame, data.size())), "FRAME")) {
    throw IoError("Y4M: missing FRAME");
  }
  while (frame < data.size() && data[frame] != '\n') ++frame;
  ++frame;
  const size_t count = static_cast<size_t>(width) * height;
  if (frame > data.size() || data.size() - frame < count) {
    throw IoError("Y4M: truncated frame");
  }
  Image image(width, height);
  std::copy_n(data.begin() + frame, count, image.pixels.begin());
  return image;
}

std::vector<uint8_t> ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("cannot read " + path.string());
  return bytes;
}

void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

Image ReadImage(const std::filesystem::path& path) {
  const std::vector<uint8_t> bytes = ReadFileBytes(path);
  if (StartsWith(bytes, "YUV4MPEG2")) return ParseY4mLuma(bytes);
  return ParsePgm(bytes);
}

void WritePgm(const std::filesystem::path& path, const Image& image) {
  WriteFileBytes(path, EncodePgm(image));
}

}  // namespace pvq
