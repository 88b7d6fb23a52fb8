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

#include "pvq/entropy.h"

#include <cmath>

namespace pvq {

void BuildGeometricCdf(uint32_t expectation_q8, int count,
                       std::span<uint32_t> cdf) {
  if (count < 1 || count > kMaxAlphabet ||
      cdf.size() < static_cast<size_t>(count) + 1) {
    throw std::invalid_argument("geometric cdf: bad alphabet size");
  }
  // Ratio of successive probabilities, E / (E + 1), in Q16.
  const uint64_t e = std::max<uint32_t>(expectation_q8, 1);
  const uint64_t ratio_q16 = (e << 16) / (e + kOneQ8);

  std::array<uint64_t, kMaxAlphabet> weights;
  uint64_t w = 1u << 16;
  uint64_t sum = 0;
  for (int s = 0; s < count; ++s) {
    weights[s] = w;
    sum += w;
    w = (w * ratio_q16) >> 16;
  }
  const uint64_t spare = kProbTotal - count;
  uint32_t assigned = 0;
  for (int s = 0; s < count; ++s) {
    weights[s] = 1 + weights[s] * spare / sum;
    assigned += static_cast<uint32_t>(weights[s]);
  }
  weights[0] += kProbTotal - assigned;
  cdf[0] = 0;
  for (int s = 0; s < count; ++s) {
    cdf[s + 1] = cdf[s] + static_cast<uint32_t>(weights[s]);
  }
}

LaplaceAlphabet ChooseAlphabet(uint32_t expectation_q8, uint32_t max_value) {
  const uint32_t cap =
      std::min<uint32_t>(kMaxAlphabet, 2 * (expectation_q8 / kOneQ8) + 16);
  if (max_value < cap) {
    return LaplaceAlphabet{static_cast<int>(max_value) + 1, false};
  }
  return LaplaceAlphabet{static_cast<int>(cap), true};
}

uint32_t MagnitudeExpectationQ8(int32_t mu_q8, int pulses_left,
                                int positions_left) {
  const int64_t e = static_cast<int64_t>(mu_q8) * pulses_left / positions_left;
  return static_cast<uint32_t>(std::clamp<int64_t>(e, 1, kMaxScaleQ8));
}

uint32_t RunExpectationQ8(int32_t nu_q8, int pulses_left, int positions_left) {
  const int64_t e = static_cast<int64_t>(nu_q8) * positions_left / pulses_left;
  return static_cast<uint32_t>(std::clamp<int64_t>(e, 1, kMaxScaleQ8));
}

void BitCounter::EncodeSymbol(Cdf cdf, int symbol) {
  const uint32_t freq = cdf[symbol + 1] - cdf[symbol];
  bits_ += kProbBits - std::log2(static_cast<double>(freq));
}

void AdaptiveBit::BuildCdf(std::array<uint32_t, 3>& cdf) const {
  const uint64_t p0 =
      static_cast<uint64_t>(zeros_) * kProbTotal / (zeros_ + ones_);
  cdf[0] = 0;
  cdf[1] = static_cast<uint32_t>(std::clamp<uint64_t>(p0, 1, kProbTotal - 1));
  cdf[2] = kProbTotal;
}

void AdaptiveBit::Update(bool bit) {
  (bit ? ones_ : zeros_) += 32;
  if (zeros_ + ones_ > 4096) {
    zeros_ = (zeros_ + 1) / 2;
    ones_ = (ones_ + 1) / 2;
  }
}

PulseVector DecodePulseVector(RangeDecoder& dec, PulseModels& models, int k,
                              int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("pulse decode: K, N >= 1");
  std::vector<int32_t> y(n, 0);
  int pulses_left = k;
  for (int i = 0; i < n && pulses_left > 0; ++i) {
    const int positions_left = n - i;
    if (pulses_left == 1) {
      uint32_t run = 0;
      if (positions_left > 1) {
        const uint32_t expected =
            RunExpectationQ8(models.run.q8(), 1, positions_left);
        run = DecodeLaplace(dec, expected, positions_left - 1);
        models.run.Observe(static_cast<int64_t>(run) * kOneQ8 / positions_left);
      }
      y[i + run] = dec.DecodeBits(1) ? -1 : 1;
      break;
    }
    uint32_t magnitude = pulses_left;
    if (positions_left > 1) {
      magnitude =
          DecodeLaplace(dec,
                        MagnitudeExpectationQ8(models.magnitude.q8(),
                                               pulses_left, positions_left),
                        pulses_left);
      models.magnitude.Observe(static_cast<int64_t>(magnitude) *
                               positions_left * kOneQ8 / pulses_left);
    }
    if (magnitude > 0) {
      const bool negative = dec.DecodeBits(1) != 0;
      y[i] = negative ? -static_cast<int32_t>(magnitude)
                      : static_cast<int32_t>(magnitude);
    }
    pulses_left -= static_cast<int>(magnitude);
  }
  return PulseVector(std::move(y), k);
}

}  // namespace pvq
