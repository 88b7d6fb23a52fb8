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

#include "pvq/simulate.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pvq/codebook.h"

namespace pvq {
namespace {

constexpr int64_t kChunk = 256;

void CheckArgs(int n, int k, int64_t trials) {
  if (n < 2 || k < 1 || trials < 1) {
    throw std::invalid_argument("simulation needs N >= 2, K >= 1, trials >= 1");
  }
}

double TrialError(int n, int k, uint64_t seed, int64_t trial) {
  SplitMix64 mix(seed ^ (static_cast<uint64_t>(trial) * 0xD1B54A32D192ED03ull));
  SplitMix64 rng(mix.Next());
  std::vector<double> x(n);
  double energy = 0;
  for (double& v : x) {
    v = rng.Laplace();
    energy += v * v;
  }
  const double inv = 1.0 / std::sqrt(energy);
  for (double& v : x) v *= inv;
  const std::vector<double> u = Normalize(SearchPulses(x, k));
  double err = 0;
  for (int i = 0; i < n; ++i) err += (x[i] - u[i]) * (x[i] - u[i]);
  return err;
}

double ChunkSum(int n, int k, uint64_t seed, int64_t trials, int64_t chunk) {
  double sum = 0;
  const int64_t end = std::min(trials, (chunk + 1) * kChunk);
  for (int64_t t = chunk * kChunk; t < end; ++t) {
    sum += TrialError(n, k, seed, t);
  }
  return sum;
}

SimResult Finish(int n, int k, int64_t trials, uint64_t seed,
                 const std::vector<double>& chunks) {
  double total = 0;
  for (double c : chunks) total += c;
  SimResult r;
  r.n = n;
  r.k = k;
  r.trials = trials;
  r.seed = seed;
  r.measured_mse = total / static_cast<double>(trials);
  r.predicted_mse = ExpectedDistortion(n, k);
  r.ratio = r.measured_mse / r.predicted_mse;
  return r;
}

}  // namespace

double SplitMix64::Laplace() {
  const double u = Uniform();
  return u < 0.5 ? std::log(2.0 * u) : -std::log(2.0 * (1.0 - u));
}

SimResult SimulatePvqDistortion(int n, int k, int64_t trials, uint64_t seed) {
  CheckArgs(n, k, trials);
  const int64_t chunks = (trials + kChunk - 1) / kChunk;
  std::vector<double> sums(chunks);
#pragma omp parallel for schedule(dynamic)
  for (int64_t c = 0; c < chunks; ++c) {
    sums[c] = ChunkSum(n, k, seed, trials, c);
  }
  return Finish(n, k, trials, seed, sums);
}

SimResult SimulatePvqDistortionSerial(int n, int k, int64_t trials,
                                      uint64_t seed) {
  CheckArgs(n, k, trials);
  const int64_t chunks = (trials + kChunk - 1) / kChunk;
  std::vector<double> sums(chunks);
  for (int64_t c = 0; c < chunks; ++c) {
    sums[c] = ChunkSum(n, k, seed, trials, c);
  }
  return Finish(n, k, trials, seed, sums);
}

}  // namespace pvq
