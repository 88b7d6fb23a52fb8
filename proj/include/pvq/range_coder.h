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

#ifndef PVQ_RANGE_CODER_H_
#define PVQ_RANGE_CODER_H_

// Byte-oriented range coder with 15-bit probability totals.
//
// The encoder keeps a 32-bit low register plus a carry bit; carries are
// propagated into bytes already written. Every renormalization emits exactly
// one byte on the encoder side and consumes exactly one byte on the decoder
// side, and the encoder flushes the same 4 bytes the decoder primes with, so
// after the last symbol RangeDecoder::position() equals the encoded size.
// All arithmetic is integer; streams are bit-exact across platforms.

#include <cstdint>
#include <span>
#include <vector>

namespace pvq {

inline constexpr int kProbBits = 15;
inline constexpr uint32_t kProbTotal = 1u << kProbBits;

// Cumulative frequencies: cdf[0] == 0, cdf.back() == kProbTotal, strictly
// increasing. Symbol s owns [cdf[s], cdf[s + 1]).
using Cdf = std::span<const uint32_t>;

// Throws std::invalid_argument when the table violates the above.
void ValidateCdf(Cdf cdf);

class RangeEncoder {
 public:
  RangeEncoder() = default;

  // Throws std::out_of_range for a symbol outside the table.
  void EncodeSymbol(Cdf cdf, int symbol);
  void Encode(uint32_t cum_low, uint32_t freq);
  // Uniform raw bits, 1 <= nbits <= 16.
  void EncodeBits(uint32_t value, int nbits);

  // Bytes emitted so far (excluding the final flush).
  size_t position() const { return out_.size(); }

  // Flushes and returns the stream. The encoder must not be used afterwards.
  std::vector<uint8_t> Finish();

 private:
  void PropagateCarry();
  void Normalize();

  uint64_t low_ = 0;
  uint32_t range_ = 0xFFFFFFFFu;
  std::vector<uint8_t> out_;
};

class RangeDecoder {
 public:
  explicit RangeDecoder(std::span<const uint8_t> data);

  int DecodeSymbol(Cdf cdf);
  uint32_t DecodeBits(int nbits);

  // Bytes consumed so far, including the 4 priming bytes.
  size_t position() const { return pos_; }
  // True once the decoder needed bytes past the end of its input.
  bool overrun() const { return overrun_; }

  // Set by model-level decoders when a value had to be clamped.
  void MarkCorrupt() { corrupt_ = true; }
  bool corrupt() const { return corrupt_ || overrun_; }

 private:
  uint8_t NextByte();
  void Normalize();

  std::span<const uint8_t> data_;
  size_t pos_ = 0;
  uint32_t code_ = 0;
  uint32_t range_ = 0xFFFFFFFFu;
  bool overrun_ = false;
  bool corrupt_ = false;
};

}  // namespace pvq

#endif  // PVQ_RANGE_CODER_H_
