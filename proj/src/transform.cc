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

#include "pvq/transform.h"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pvq {
namespace {

constexpr int kMaxSize = 16;

struct DctBasis {
  int size = 0;
  // basis[k * size + i] = c_k cos(pi (2i + 1) k / (2 size))
  std::array<double, kMaxSize * kMaxSize> basis{};
};

DctBasis MakeBasis(int size) {
  DctBasis b;
  b.size = size;
  for (int k = 0; k < size; ++k) {
    const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / size);
    for (int i = 0; i < size; ++i) {
      b.basis[k * size + i] =
          scale * std::cos(std::numbers::pi * (2 * i + 1) * k / (2.0 * size));
    }
  }
  return b;
}

const DctBasis& Basis(int size) {
  static const DctBasis b4 = MakeBasis(4);
  static const DctBasis b8 = MakeBasis(8);
  static const DctBasis b16 = MakeBasis(16);
  switch (size) {
    case 4:
      return b4;
    case 8:
      return b8;
    case 16:
      return b16;
    default:
      throw std::invalid_argument("unsupported DCT size");
  }
}

void CheckSpans(int size, size_t in, size_t out) {
  const size_t n = static_cast<size_t>(size) * size;
  if (in != n || out != n) throw std::invalid_argument("DCT span size");
}

// out = M in M^T when forward, M^T in M otherwise.
void Separable(const DctBasis& b, bool forward, std::span<const double> in,
               std::span<double> out) {
  const int n = b.size;
  const auto m = [&](int row, int col) {
    return forward ? b.basis[row * n + col] : b.basis[col * n + row];
  };
  std::array<double, kMaxSize * kMaxSize> tmp{};
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      double acc = 0;
      for (int c = 0; c < n; ++c) acc += m(k, c) * in[r * n + c];
      tmp[r * n + k] = acc;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int c = 0; c < n; ++c) {
      double acc = 0;
      for (int r = 0; r < n; ++r) acc += m(k, r) * tmp[r * n + c];
      out[k * n + c] = acc;
    }
  }
}

}  // namespace

void ForwardDct2(int size, std::span<const double> block,
                 std::span<double> coeffs) {
  const DctBasis& b = Basis(size);
  CheckSpans(size, block.size(), coeffs.size());
  Separable(b, true, block, coeffs);
}

void InverseDct2(int size, std::span<const double> coeffs,
                 std::span<double> block) {
  const DctBasis& b = Basis(size);
  CheckSpans(size, coeffs.size(), block.size());
  Separable(b, false, coeffs, block);
}

std::vector<double> ForwardDct2(int size, std::span<const double> block) {
  std::vector<double> out(block.size());
  ForwardDct2(size, block, out);
  return out;
}

std::vector<double> InverseDct2(int size, std::span<const double> coeffs) {
  std::vector<double> out(coeffs.size());
  InverseDct2(size, coeffs, out);
  return out;
}

}  // namespace pvq
