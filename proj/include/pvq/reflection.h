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

#ifndef PVQ_REFLECTION_H_
#define PVQ_REFLECTION_H_

#include <optional>
#include <span>
#include <vector>

namespace pvq {

// Householder reflection that maps a predictor r onto -sign(r_m) |r| e_m,
// where m is the largest-magnitude component of r. The encoder and decoder
// derive it from the same predictor, so nothing about it is transmitted.
struct Reflector {
  std::vector<double> normal;  // v = r / |r| + s e_m
  int axis = 0;                // m; lowest index among equal maxima
  int sign = 1;                // s = sign(r_m), sign(0) = +1

  int size() const { return static_cast<int>(normal.size()); }
};

// Returns nullopt for an empty or all-zero predictor; such a band must be
// coded without a reference.
std::optional<Reflector> ComputeReflector(std::span<const double> r);

// z = x - 2 (v.x / v.v) v. Throws std::invalid_argument on size mismatch.
std::vector<double> ApplyReflection(std::span<const double> x,
                                    const Reflector& ref);

// Angle between the (reflected) input and the predictor axis, in [0, pi].
// z must be non-zero.
double ComputeTheta(std::span<const double> z, const Reflector& ref);

// Rebuilds the band from quantized gain, angle and the (N-1)-dimensional
// unit shape that skips the predictor axis:
//   z = g (-s cos(theta) e_m + sin(theta) u),  x = reflect(z).
std::vector<double> Reconstruct(double gain, double theta,
                                std::span<const double> shape,
                                const Reflector& ref);

// Copies z without the component at ref.axis.
std::vector<double> DropAxis(std::span<const double> z, const Reflector& ref);

}  // namespace pvq

#endif  // PVQ_REFLECTION_H_
