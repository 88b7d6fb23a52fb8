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

#ifndef PVQ_ENTROPY_H_
#define PVQ_ENTROPY_H_

// Adaptive Laplace models and the pulse-vector coder.
//
// Every model parameter is Q8 fixed point and adapts only on values that
// have been coded, so encoder and decoder stay in lockstep. The coding
// functions are templates over the symbol sink so the same code drives the
// range encoder, the range decoder and the rate estimator (BitCounter).

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "pvq/codebook.h"
#include "pvq/range_coder.h"

namespace pvq {

inline constexpr int32_t kOneQ8 = 256;
inline constexpr int32_t kMinScaleQ8 = 8;
inline constexpr int32_t kMaxScaleQ8 = 240 * kOneQ8;
inline constexpr int kMaxAlphabet = 512;
inline constexpr uint32_t kUnbounded = std::numeric_limits<uint32_t>::max();

// Exponential moving average with rate 1/16.
class AdaptiveScale {
 public:
  explicit AdaptiveScale(int32_t initial_q8 = kOneQ8)
      : value_q8_(std::clamp(initial_q8, kMinScaleQ8, kMaxScaleQ8)) {}

  int32_t q8() const { return value_q8_; }

  void Observe(int64_t observation_q8) {
    observation_q8 = std::clamp<int64_t>(observation_q8, 0, kMaxScaleQ8);
    const int64_t next = value_q8_ + (observation_q8 - value_q8_) / 16;
    value_q8_ = static_cast<int32_t>(
        std::clamp<int64_t>(next, kMinScaleQ8, kMaxScaleQ8));
  }

  bool operator==(const AdaptiveScale&) const = default;

 private:
  int32_t value_q8_;
};

// Geometric CDF with the given mean over `count` symbols, each symbol
// getting at least one unit. Integer-only.
void BuildGeometricCdf(uint32_t expectation_q8, int count,
                       std::span<uint32_t> cdf);

// Alphabet for a Laplace-coded value: 2E + 16 symbols (the last one an
// escape) unless max_value fits, in which case max_value + 1 symbols and no
// escape.
struct LaplaceAlphabet {
  int count = 1;
  bool escape = false;
};
LaplaceAlphabet ChooseAlphabet(uint32_t expectation_q8, uint32_t max_value);

// E(|y_n|) = mu K_n / (N - n) and E(run) = nu (N - n) / K_n, in Q8.
uint32_t MagnitudeExpectationQ8(int32_t mu_q8, int pulses_left,
                                int positions_left);
uint32_t RunExpectationQ8(int32_t nu_q8, int pulses_left, int positions_left);

inline uint32_t ZigZag(int32_t v) {
  return (static_cast<uint32_t>(v) << 1) ^ static_cast<uint32_t>(v >> 31);
}
inline int32_t UnZigZag(uint32_t u) {
  return static_cast<int32_t>(u >> 1) ^ -static_cast<int32_t>(u & 1);
}

// Rate estimator with the same interface as RangeEncoder.
class BitCounter {
 public:
  void EncodeSymbol(Cdf cdf, int symbol);
  void EncodeBits(uint32_t, int nbits) { bits_ += nbits; }
  double bits() const { return bits_; }

 private:
  double bits_ = 0;
};

// Exp-Golomb in raw bits, for escapes.
template <class Enc>
void EncodeRawUnbounded(Enc& enc, uint32_t value) {
  const uint64_t m = static_cast<uint64_t>(value) + 1;
  const int len = std::bit_width(m);
  enc.EncodeBits(len - 1, 6);
  for (int left = len - 1; left > 0;) {
    const int chunk = std::min(left, 16);
    left -= chunk;
    enc.EncodeBits(static_cast<uint32_t>(m >> left) & ((1u << chunk) - 1),
                   chunk);
  }
}

inline uint32_t DecodeRawUnbounded(RangeDecoder& dec) {
  const int extra = static_cast<int>(dec.DecodeBits(6));
  if (extra > 32) {
    dec.MarkCorrupt();
    return 0;
  }
  uint64_t m = 1;
  for (int left = extra; left > 0;) {
    const int chunk = std::min(left, 16);
    left -= chunk;
    m = (m << chunk) | dec.DecodeBits(chunk);
  }
  return static_cast<uint32_t>(
      std::min<uint64_t>(m - 1, std::numeric_limits<uint32_t>::max()));
}

template <class Enc>
void EncodeLaplace(Enc& enc, uint32_t expectation_q8, uint32_t value,
                   uint32_t max_value) {
  if (value > max_value) throw std::out_of_range("value above its bound");
  const LaplaceAlphabet alphabet = ChooseAlphabet(expectation_q8, max_value);
  if (alphabet.count == 1) return;
  std::array<uint32_t, kMaxAlphabet + 1> cdf;
  BuildGeometricCdf(expectation_q8, alphabet.count, cdf);
  const Cdf table(cdf.data(), alphabet.count + 1);
  const uint32_t escape = alphabet.count - 1;
  if (alphabet.escape && value >= escape) {
    enc.EncodeSymbol(table, static_cast<int>(escape));
    EncodeRawUnbounded(enc, value - escape);
    return;
  }
  enc.EncodeSymbol(table, static_cast<int>(value));
}

// Values above max_value (only reachable through a corrupt escape) are
// clamped and flag the decoder as corrupt.
inline uint32_t DecodeLaplace(RangeDecoder& dec, uint32_t expectation_q8,
                              uint32_t max_value) {
  const LaplaceAlphabet alphabet = ChooseAlphabet(expectation_q8, max_value);
  if (alphabet.count == 1) return 0;
  std::array<uint32_t, kMaxAlphabet + 1> cdf;
  BuildGeometricCdf(expectation_q8, alphabet.count, cdf);
  const Cdf table(cdf.data(), alphabet.count + 1);
  const uint32_t escape = alphabet.count - 1;
  uint32_t value = static_cast<uint32_t>(dec.DecodeSymbol(table));
  if (alphabet.escape && value == escape) {
    const uint64_t full =
        static_cast<uint64_t>(escape) + DecodeRawUnbounded(dec);
    if (full > max_value) {
      dec.MarkCorrupt();
      return max_value;
    }
    value = static_cast<uint32_t>(full);
  }
  return value;
}

// Unsigned integer with an adaptive mean.
class AdaptiveLaplace {
 public:
  explicit AdaptiveLaplace(int32_t initial_mean_q8 = kOneQ8)
      : mean_(initial_mean_q8) {}

  int32_t mean_q8() const { return mean_.q8(); }

  template <class Enc>
  void Encode(Enc& enc, uint32_t value) {
    EncodeLaplace(enc, mean_.q8(), value, kUnbounded);
    Update(value);
  }
  uint32_t Decode(RangeDecoder& dec) {
    const uint32_t value = DecodeLaplace(dec, mean_.q8(), kUnbounded);
    Update(value);
    return value;
  }

  template <class Enc>
  void EncodeSigned(Enc& enc, int32_t value) {
    Encode(enc, ZigZag(value));
  }
  int32_t DecodeSigned(RangeDecoder& dec) { return UnZigZag(Decode(dec)); }

  bool operator==(const AdaptiveLaplace&) const = default;

 private:
  void Update(uint32_t value) {
    mean_.Observe(static_cast<int64_t>(value) * kOneQ8);
  }

  AdaptiveScale mean_;
};

// Binary flag with adaptive counts.
class AdaptiveBit {
 public:
  template <class Enc>
  void Encode(Enc& enc, bool bit) {
    std::array<uint32_t, 3> cdf;
    BuildCdf(cdf);
    enc.EncodeSymbol(cdf, bit ? 1 : 0);
    Update(bit);
  }
  bool Decode(RangeDecoder& dec) {
    std::array<uint32_t, 3> cdf;
    BuildCdf(cdf);
    const bool bit = dec.DecodeSymbol(cdf) == 1;
    Update(bit);
    return bit;
  }

  bool operator==(const AdaptiveBit&) const = default;

 private:
  void BuildCdf(std::array<uint32_t, 3>& cdf) const;
  void Update(bool bit);

  uint32_t zeros_ = 32;
  uint32_t ones_ = 32;
};

// Adaptive scales for the magnitude (mu) and run-length (nu) models.
struct PulseModels {
  AdaptiveScale magnitude{kOneQ8};
  AdaptiveScale run{kOneQ8};

  bool operator==(const PulseModels&) const = default;
};

// Codes y in order: while more than one pulse is left each magnitude is
// coded against E = mu K_n / (N - n) followed by a sign bit; with one pulse
// left, its distance from n is coded against E = nu (N - n) / K_n followed
// by its sign. Nothing is coded after the last pulse.
template <class Enc>
void EncodePulseVector(Enc& enc, PulseModels& models,
                       std::span<const int32_t> y, int k) {
  const int n = static_cast<int>(y.size());
  int64_t l1 = 0;
  for (int32_t c : y) l1 += c < 0 ? -static_cast<int64_t>(c) : c;
  if (k < 1 || l1 != k) throw std::invalid_argument("pulse vector L1 != K");

  int pulses_left = k;
  for (int i = 0; i < n && pulses_left > 0; ++i) {
    const int positions_left = n - i;
    if (pulses_left == 1) {
      int run = 0;
      while (y[i + run] == 0) ++run;
      if (positions_left > 1) {
        EncodeLaplace(enc, RunExpectationQ8(models.run.q8(), 1, positions_left),
                      run, positions_left - 1);
        models.run.Observe(static_cast<int64_t>(run) * kOneQ8 / positions_left);
      }
      enc.EncodeBits(y[i + run] < 0 ? 1 : 0, 1);
      return;
    }
    const uint32_t magnitude = y[i] < 0 ? -y[i] : y[i];
    if (positions_left > 1) {
      EncodeLaplace(enc,
                    MagnitudeExpectationQ8(models.magnitude.q8(), pulses_left,
                                           positions_left),
                    magnitude, pulses_left);
      models.magnitude.Observe(static_cast<int64_t>(magnitude) *
                               positions_left * kOneQ8 / pulses_left);
    }
    if (magnitude > 0) enc.EncodeBits(y[i] < 0 ? 1 : 0, 1);
    pulses_left -= static_cast<int>(magnitude);
  }
}

PulseVector DecodePulseVector(RangeDecoder& dec, PulseModels& models, int k,
                              int n);

}  // namespace pvq

#endif  // PVQ_ENTROPY_H_
