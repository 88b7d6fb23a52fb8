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

#include "pvq/reflection.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pvq {

std::optional<Reflector> ComputeReflector(std::span<const double> r) {
  if (r.empty()) return std::nullopt;
  double energy = 0;
  int axis = 0;
  for (size_t i = 0; i < r.size(); ++i) {
    energy += r[i] * r[i];
    if (std::fabs(r[i]) > std::fabs(r[axis])) axis = static_cast<int>(i);
  }
  if (!(energy > 0) || !std::isfinite(energy)) return std::nullopt;
  const double norm = std::sqrt(energy);

  Reflector ref;
  ref.axis = axis;
  ref.sign = r[axis] < 0 ? -1 : 1;
  ref.normal.resize(r.size());
  for (size_t i = 0; i < r.size(); ++i) ref.normal[i] = r[i] / norm;
  ref.normal[axis] += ref.sign;
  return ref;
}

std::vector<double> ApplyReflection(std::span<const double> x,
                                    const Reflector& ref) {
  if (x.size() != ref.normal.size()) {
    throw std::invalid_argument("reflection: dimension mismatch");
  }
  double vx = 0;
  double vv = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    vx += ref.normal[i] * x[i];
    vv += ref.normal[i] * ref.normal[i];
  }
  const double scale = 2.0 * vx / vv;
  std::vector<double> z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] - scale * ref.normal[i];
  return z;
}

double ComputeTheta(std::span<const double> z, const Reflector& ref) {
  if (z.size() != ref.normal.size()) {
    throw std::invalid_argument("theta: dimension mismatch");
  }
  double energy = 0;
  for (double v : z) energy += v * v;
  if (!(energy > 0)) throw std::invalid_argument("theta: zero vector");
  const double cos_theta = -ref.sign * z[ref.axis] / std::sqrt(energy);
  return std::acos(std::clamp(cos_theta, -1.0, 1.0));
}

std::vector<double> Reconstruct(double gain, double theta,
                                std::span<const double> shape,
                                const Reflector& ref) {
  const int n = ref.size();
  if (static_cast<int>(shape.size()) != n - 1) {
    throw std::invalid_argument("reconstruct: shape must have N-1 entries");
  }
  const double along = gain * std::cos(theta);
  const double across = gain * std::sin(theta);
  std::vector<double> z(n);
  for (int i = 0, j = 0; i < n; ++i) {
    if (i == ref.axis) {
      z[i] = -ref.sign * along;
    } else {
      z[i] = across * shape[j++];
    }
  }
  return ApplyReflection(z, ref);
}

std::vector<double> DropAxis(std::span<const double> z, const Reflector& ref) {
  std::vector<double> rest;
  rest.reserve(z.size() - 1);
  for (size_t i = 0; i < z.size(); ++i) {
    if (static_cast<int>(i) != ref.axis) rest.push_back(z[i]);
  }
  return rest;
}

}  // namespace pvq
