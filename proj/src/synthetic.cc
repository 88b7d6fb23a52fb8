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

#include "pvq/synthetic.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "pvq/simulate.h"

namespace pvq {
namespace {

constexpr int kSize = 128;

uint8_t Clamp8(double v) {
  return static_cast<uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

Image Generate(int w, int h, const std::function<double(int, int)>& f) {
  Image img(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) img.at(x, y) = Clamp8(f(x, y));
  }
  return img;
}

Image SmoothNoise() {
  SplitMix64 rng(7);
  std::vector<double> noise(kSize * kSize);
  for (double& v : noise) v = rng.Uniform();
  // Three passes of a 5-tap box blur in each direction.
  std::vector<double> tmp(noise.size());
  for (int pass = 0; pass < 3; ++pass) {
    for (int y = 0; y < kSize; ++y) {
      for (int x = 0; x < kSize; ++x) {
        double s = 0;
        for (int d = -2; d <= 2; ++d) {
          s += noise[y * kSize + std::clamp(x + d, 0, kSize - 1)];
        }
        tmp[y * kSize + x] = s / 5;
      }
    }
    for (int y = 0; y < kSize; ++y) {
      for (int x = 0; x < kSize; ++x) {
        double s = 0;
        for (int d = -2; d <= 2; ++d) {
          s += tmp[std::clamp(y + d, 0, kSize - 1) * kSize + x];
        }
        noise[y * kSize + x] = s / 5;
      }
    }
  }
  const auto [lo, hi] = std::minmax_element(noise.begin(), noise.end());
  const double span = *hi - *lo;
  return Generate(kSize, kSize, [&](int x, int y) {
    return 30 + 200 * (noise[y * kSize + x] - *lo) / span;
  });
}

}  // namespace

std::vector<NamedImage> SyntheticCorpus() {
  using std::numbers::pi;
  std::vector<NamedImage> corpus;
  corpus.push_back({"checker", Generate(kSize, kSize, [](int x, int y) {
                      return ((x / 16 + y / 16) % 2) ? 215.0 : 40.0;
                    })});
  corpus.push_back({"gradient_low", Generate(kSize, kSize, [](int x, int y) {
                      return 110 + 0.25 * x + 0.1 * y;
                    })});
  corpus.push_back({"gradient_radial", Generate(kSize, kSize, [](int x, int y) {
                      const double dx = x - 64.0;
                      const double dy = y - 50.0;
                      return 220 - 0.012 * (dx * dx + dy * dy);
                    })});
  {
    SplitMix64 rng(3);
    corpus.push_back({"noise", Generate(kSize, kSize, [&](int, int) {
                        return 255 * rng.Uniform();
                      })});
  }
  corpus.push_back({"shapes", Generate(kSize, kSize, [](int x, int y) {
                      double v = 70;
                      if (x > 20 && x < 60 && y > 30 && y < 100) v = 190;
                      const double dx = x - 90.0;
                      const double dy = y - 60.0;
                      if (dx * dx + dy * dy < 25 * 25) v = 140 + 0.5 * dx;
                      if (std::abs(x - y) < 2) v = 250;
                      return v;
                    })});
  corpus.push_back({"smooth_noise", SmoothNoise()});
  corpus.push_back({"stripes", Generate(120, 100, [](int x, int y) {
                      const double amplitude = 20 + 0.6 * x + 0.2 * y;
                      return 128 +
                             amplitude * std::sin(2 * pi * (x + 2 * y) / 11.0);
                    })});
  corpus.push_back({"texture_high", Generate(kSize, kSize, [](int x, int y) {
                      return 128 + 60 * std::sin(2 * pi * x / 3.7) +
                             60 * std::sin(2 * pi * y / 5.3 + 0.5 * x);
                    })});
  return corpus;
}

}  // namespace pvq
