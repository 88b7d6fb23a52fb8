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

#ifndef PVQ_CODEBOOK_H_
#define PVQ_CODEBOOK_H_

// Normalized pyramid vector quantizer: the set of integer vectors y in Z^N
// with sum |y_i| = K, projected onto the unit sphere.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <vector>

namespace pvq {

// Integer codeword whose magnitudes sum exactly to pulses().
class PulseVector {
 public:
  PulseVector() = default;
  // Throws std::invalid_argument if sum |y_i| != k or the vector is empty.
  PulseVector(std::vector<int32_t> coeffs, int k);

  // All-zero codeword of dimension n (K = 0).
  static PulseVector Zero(int n);

  int size() const { return static_cast<int>(coeffs_.size()); }
  int pulses() const { return k_; }
  std::span<const int32_t> coeffs() const { return coeffs_; }
  int32_t operator[](int i) const { return coeffs_[i]; }

  bool operator==(const PulseVector&) const = default;

 private:
  std::vector<int32_t> coeffs_;
  int k_ = 0;
};

// Asymptotic constant of the PVQ distortion model.
inline constexpr double kDistortionConstant = 4.0;

// Finds the codeword whose normalized direction best matches x. Small
// problems are solved exactly; larger ones use projection followed by greedy
// pulse placement and a pulse-move refinement pass. An all-zero x puts every
// pulse on dimension 0 with positive sign.
PulseVector SearchPulses(std::span<const double> x, int k);

// Projection + greedy + refinement path only, regardless of problem size.
PulseVector SearchPulsesGreedy(std::span<const double> x, int k);

// Exact maximizer of <x, y>/|y| by dynamic programming over (pulses, |y|^2).
// Cost grows as N K^4; intended for small N and K.
PulseVector SearchPulsesExact(std::span<const double> x, int k);

// y / |y|, or the zero vector when K = 0.
std::vector<double> Normalize(const PulseVector& y);

// Number of codewords V(N, K). Exact for any size.
boost::multiprecision::cpp_int CodebookSize(int n, int k);

// Mean squared error of quantizing a unit-norm Laplace vector:
// ((N-1)^2 + C_K (N-1)) / (24 K^2). Requires N >= 2 and K >= 1.
double ExpectedDistortion(int n, int k);

}  // namespace pvq

#endif  // PVQ_CODEBOOK_H_
