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

#include "pvq/codebook.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pvq {
namespace {

// Problems with n (k+1)^2 (k^2+1) below this are searched exactly.
constexpr int64_t kExactSearchBudget = 8192;

void CheckSearchArgs(std::span<const double> x, int k) {
  if (x.empty()) throw std::invalid_argument("pulse search: empty input");
  if (k < 0) throw std::invalid_argument("pulse search: negative K");
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("pulse search: non-finite input");
    }
  }
}

std::vector<double> Magnitudes(std::span<const double> x) {
  std::vector<double> a(x.size());
  for (size_t i = 0; i < x.size(); ++i) a[i] = std::fabs(x[i]);
  return a;
}

// Applies the signs of x to the non-negative pulse counts.
PulseVector WithSigns(std::span<const double> x, std::vector<int32_t> y,
                      int k) {
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0) y[i] = -y[i];
  }
  return PulseVector(std::move(y), k);
}

PulseVector AllOnFirst(int n, int k) {
  std::vector<int32_t> y(n, 0);
  y[0] = k;
  return PulseVector(std::move(y), k);
}

// Moves single pulses between dimensions while the normalized correlation
// strictly improves.
void RefineByPulseMoves(const std::vector<double>& a, std::vector<int32_t>& y,
                        double& xy, double& yy) {
  const int n = static_cast<int>(a.size());
  const int max_moves = n * (std::accumulate(y.begin(), y.end(), 0) + 1);
  for (int iter = 0; iter < max_moves; ++iter) {
    double best_xy = xy;
    double best_yy = yy;
    int from = -1;
    int to = -1;
    for (int i = 0; i < n; ++i) {
      if (y[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const double cand_xy = xy - a[i] + a[j];
        const double cand_yy = yy - 2.0 * y[i] + 2.0 * y[j] + 2.0;
        if (cand_xy <= 0) continue;
        // Compare cand_xy^2 / cand_yy against best_xy^2 / best_yy.
        if (cand_xy * cand_xy * best_yy >
            best_xy * best_xy * cand_yy * (1.0 + 1e-14)) {
          best_xy = cand_xy;
          best_yy = cand_yy;
          from = i;
          to = j;
        }
      }
    }
    if (from < 0) return;
    --y[from];
    ++y[to];
    xy = best_xy;
    yy = best_yy;
  }
}

}  // namespace

PulseVector::PulseVector(std::vector<int32_t> coeffs, int k)
    : coeffs_(std::move(coeffs)), k_(k) {
  if (coeffs_.empty()) throw std::invalid_argument("empty pulse vector");
  if (k < 0) throw std::invalid_argument("negative pulse count");
  int64_t l1 = 0;
  for (int32_t c : coeffs_) l1 += std::abs(static_cast<int64_t>(c));
  if (l1 != k) {
    throw std::invalid_argument("pulse vector L1 norm " + std::to_string(l1) +
                                " != K " + std::to_string(k));
  }
}

PulseVector PulseVector::Zero(int n) {
  return PulseVector(std::vector<int32_t>(n, 0), 0);
}

PulseVector SearchPulsesGreedy(std::span<const double> x, int k) {
  CheckSearchArgs(x, k);
  const int n = static_cast<int>(x.size());
  if (k == 0) return PulseVector::Zero(n);
  const std::vector<double> a = Magnitudes(x);
  const double l1 = std::accumulate(a.begin(), a.end(), 0.0);
  if (l1 == 0) return AllOnFirst(n, k);

  std::vector<int32_t> y(n, 0);
  int placed = 0;
  for (int i = 0; i < n; ++i) {
    y[i] = static_cast<int32_t>(std::floor(k * a[i] / l1));
    placed += y[i];
  }
  if (placed > k) {
    std::fill(y.begin(), y.end(), 0);
    placed = 0;
  }
  double xy = 0;
  double yy = 0;
  for (int i = 0; i < n; ++i) {
    xy += a[i] * y[i];
    yy += static_cast<double>(y[i]) * y[i];
  }
  for (; placed < k; ++placed) {
    int best = 0;
    double best_num = -1;
    double best_den = 1;
    for (int i = 0; i < n; ++i) {
      const double num = (xy + a[i]) * (xy + a[i]);
      const double den = yy + 2.0 * y[i] + 1.0;
      if (num * best_den > best_num * den) {
        best = i;
        best_num = num;
        best_den = den;
      }
    }
    xy += a[best];
    yy += 2.0 * y[best] + 1.0;
    ++y[best];
  }
  RefineByPulseMoves(a, y, xy, yy);
  return WithSigns(x, std::move(y), k);
}

PulseVector SearchPulsesExact(std::span<const double> x, int k) {
  CheckSearchArgs(x, k);
  const int n = static_cast<int>(x.size());
  if (k == 0) return PulseVector::Zero(n);
  const std::vector<double> a = Magnitudes(x);
  if (std::all_of(a.begin(), a.end(), [](double v) { return v == 0; })) {
    return AllOnFirst(n, k);
  }

  // best[used][energy]: largest sum a_i y_i over the dimensions seen so far
  // using `used` pulses with sum y_i^2 == energy; -1 marks unreachable.
  const int max_energy = k * k;
  const int width = max_energy + 1;
  const auto at = [width](int used, int energy) {
    return static_cast<size_t>(used) * width + energy;
  };
  std::vector<double> best((k + 1) * static_cast<size_t>(width), -1.0);
  best[at(0, 0)] = 0.0;
  std::vector<std::vector<int16_t>> choice(
      n, std::vector<int16_t>((k + 1) * static_cast<size_t>(width), -1));

  for (int d = 0; d < n; ++d) {
    std::vector<double> next((k + 1) * static_cast<size_t>(width), -1.0);
    for (int used = 0; used <= k; ++used) {
      for (int energy = 0; energy <= max_energy; ++energy) {
        const double base = best[at(used, energy)];
        if (base < 0) continue;
        for (int p = 0; used + p <= k; ++p) {
          const int e = energy + p * p;
          if (e > max_energy) break;
          const double v = base + a[d] * p;
          const size_t idx = at(used + p, e);
          if (v > next[idx]) {
            next[idx] = v;
            choice[d][idx] = static_cast<int16_t>(p);
          }
        }
      }
    }
    best = std::move(next);
  }

  int best_energy = -1;
  for (int energy = 1; energy <= max_energy; ++energy) {
    const double v = best[at(k, energy)];
    if (v < 0) continue;
    if (best_energy < 0) {
      best_energy = energy;
      continue;
    }
    const double w = best[at(k, best_energy)];
    if (v * v * best_energy > w * w * energy) best_energy = energy;
  }

  std::vector<int32_t> y(n, 0);
  int used = k;
  int energy = best_energy;
  for (int d = n - 1; d >= 0; --d) {
    const int p = choice[d][at(used, energy)];
    y[d] = p;
    used -= p;
    energy -= p * p;
  }
  return WithSigns(x, std::move(y), k);
}

PulseVector SearchPulses(std::span<const double> x, int k) {
  CheckSearchArgs(x, k);
  const int64_t kk = k;
  const int64_t cost =
      static_cast<int64_t>(x.size()) * (kk + 1) * (kk + 1) * (kk * kk + 1);
  if (cost <= kExactSearchBudget) return SearchPulsesExact(x, k);
  return SearchPulsesGreedy(x, k);
}

std::vector<double> Normalize(const PulseVector& y) {
  std::vector<double> u(y.size(), 0.0);
  if (y.pulses() == 0) return u;
  double energy = 0;
  for (int32_t c : y.coeffs()) energy += static_cast<double>(c) * c;
  const double scale = 1.0 / std::sqrt(energy);
  for (int i = 0; i < y.size(); ++i) u[i] = y[i] * scale;
  return u;
}

boost::multiprecision::cpp_int CodebookSize(int n, int k) {
  if (n < 1 || k < 0) {
    throw std::invalid_argument("codebook size needs N >= 1 and K >= 0");
  }
  using boost::multiprecision::cpp_int;
  // prev holds V(d-1, .), cur holds V(d, .).
  std::vector<cpp_int> prev(k + 1, 0);
  prev[0] = 1;
  std::vector<cpp_int> cur(k + 1);
  for (int d = 1; d <= n; ++d) {
    cur[0] = 1;
    for (int j = 1; j <= k; ++j) cur[j] = prev[j] + cur[j - 1] + prev[j - 1];
    std::swap(prev, cur);
  }
  return prev[k];
}

double ExpectedDistortion(int n, int k) {
  if (n < 2 || k < 1) {
    throw std::invalid_argument("expected distortion needs N >= 2, K >= 1");
  }
  const double dof = n - 1.0;
  return (dof * dof + kDistortionConstant * dof) /
         (24.0 * static_cast<double>(k) * k);
}

}  // namespace pvq
