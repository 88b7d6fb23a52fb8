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

#ifndef PVQ_SIMULATE_H_
#define PVQ_SIMULATE_H_

#include <cstdint>

namespace pvq {

// SplitMix64: 64-bit state, fixed output sequence for a given seed.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in the open interval (0, 1).
  double Uniform() { return ((Next() >> 11) + 0.5) * 0x1.0p-53; }

  // Standard Laplace sample by inverse CDF.
  double Laplace();

 private:
  uint64_t state_;
};

struct SimResult {
  int n = 0;
  int k = 0;
  int64_t trials = 0;
  uint64_t seed = 0;
  double measured_mse = 0;
  double predicted_mse = 0;
  double ratio = 0;  // measured / predicted

  bool operator==(const SimResult&) const = default;
};

// Quantizes `trials` unit-normalized i.i.d. Laplace vectors of dimension n
// with K pulses and reports the mean squared error against the model. Each
// trial draws from its own seeded stream and partial sums are combined in a
// fixed order, so the result depends only on the arguments.
// Requires n >= 2, k >= 1, trials >= 1.
SimResult SimulatePvqDistortion(int n, int k, int64_t trials, uint64_t seed);
SimResult SimulatePvqDistortionSerial(int n, int k, int64_t trials,
                                      uint64_t seed);

}  // namespace pvq

#endif  // PVQ_SIMULATE_H_
