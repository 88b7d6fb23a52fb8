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

#include "pvq/metrics.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace pvq {
namespace {

constexpr int kWindow = 8;
constexpr int kStride = 4;
constexpr double kC1 = (0.01 * 255) * (0.01 * 255);
constexpr double kC2 = (0.03 * 255) * (0.03 * 255);

void CheckSameSize(const Image& a, const Image& b) {
  if (a.width != b.width || a.height != b.height) {
    throw std::invalid_argument("frames differ in size");
  }
  if (a.empty()) throw std::invalid_argument("empty frame");
}

struct WindowGrid {
  int w = 0;
  int h = 0;
  int nx = 0;
  int ny = 0;
};

WindowGrid MakeGrid(const Image& img) {
  WindowGrid g;
  g.w = std::min(kWindow, img.width);
  g.h = std::min(kWindow, img.height);
  g.nx = (img.width - g.w) / kStride + 1;
  g.ny = (img.height - g.h) / kStride + 1;
  return g;
}

double WindowSsim(const Image& a, const Image& b, const WindowGrid& g, int wx,
                  int wy) {
  const int x0 = wx * kStride;
  const int y0 = wy * kStride;
  double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
  for (int y = y0; y < y0 + g.h; ++y) {
    for (int x = x0; x < x0 + g.w; ++x) {
      const double pa = a.at(x, y);
      const double pb = b.at(x, y);
      sa += pa;
      sb += pb;
      saa += pa * pa;
      sbb += pb * pb;
      sab += pa * pb;
    }
  }
  const double n = static_cast<double>(g.w) * g.h;
  const double ma = sa / n;
  const double mb = sb / n;
  const double va = saa / n - ma * ma;
  const double vb = sbb / n - mb * mb;
  const double cov = sab / n - ma * mb;
  return ((2 * ma * mb + kC1) * (2 * cov + kC2)) /
         ((ma * ma + mb * mb + kC1) * (va + vb + kC2));
}

double RowSsim(const Image& a, const Image& b, const WindowGrid& g, int wy) {
  double sum = 0;
  for (int wx = 0; wx < g.nx; ++wx) sum += WindowSsim(a, b, g, wx, wy);
  return sum;
}

}  // namespace

double Psnr(const Image& a, const Image& b) {
  CheckSameSize(a, b);
  double se = 0;
  for (size_t i = 0; i < a.pixels.size(); ++i) {
    const double d = static_cast<double>(a.pixels[i]) - b.pixels[i];
    se += d * d;
  }
  if (se == 0) return kPsnrCap;
  const double mse = se / a.pixels.size();
  return std::min(kPsnrCap, 10.0 * std::log10(255.0 * 255.0 / mse));
}

double Ssim(const Image& a, const Image& b) {
  CheckSameSize(a, b);
  const WindowGrid g = MakeGrid(a);
  std::vector<double> rows(g.ny);
#pragma omp parallel for schedule(static)
  for (int wy = 0; wy < g.ny; ++wy) rows[wy] = RowSsim(a, b, g, wy);
  double sum = 0;
  for (double r : rows) sum += r;
  return sum / (static_cast<double>(g.nx) * g.ny);
}

double SsimSerial(const Image& a, const Image& b) {
  CheckSameSize(a, b);
  const WindowGrid g = MakeGrid(a);
  double sum = 0;
  for (int wy = 0; wy < g.ny; ++wy) sum += RowSsim(a, b, g, wy);
  return sum / (static_cast<double>(g.nx) * g.ny);
}

}  // namespace pvq
