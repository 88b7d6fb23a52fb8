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

#include "pvq/range_coder.h"

#include <algorithm>
#include <stdexcept>

namespace pvq {
namespace {

constexpr uint32_t kTop = 1u << 24;

}  // namespace

void ValidateCdf(Cdf cdf) {
  if (cdf.size() < 2 || cdf.front() != 0 || cdf.back() != kProbTotal) {
    throw std::invalid_argument("cdf must run from 0 to kProbTotal");
  }
  for (size_t i = 1; i < cdf.size(); ++i) {
    if (cdf[i] <= cdf[i - 1]) {
      throw std::invalid_argument("cdf must be strictly increasing");
    }
  }
}

void RangeEncoder::EncodeSymbol(Cdf cdf, int symbol) {
  if (symbol < 0 || static_cast<size_t>(symbol) + 1 >= cdf.size()) {
    throw std::out_of_range("symbol outside cdf");
  }
  Encode(cdf[symbol], cdf[symbol + 1] - cdf[symbol]);
}

void RangeEncoder::Encode(uint32_t cum_low, uint32_t freq) {
  const uint32_t r = range_ >> kProbBits;
  low_ += static_cast<uint64_t>(r) * cum_low;
  range_ = r * freq;
  if (low_ > 0xFFFFFFFFull) PropagateCarry();
  Normalize();
}

void RangeEncoder::EncodeBits(uint32_t value, int nbits) {
  if (nbits < 1 || nbits > 16) throw std::invalid_argument("raw bit count");
  const uint32_t r = range_ >> nbits;
  low_ += static_cast<uint64_t>(r) * (value & ((1u << nbits) - 1));
  range_ = r;
  if (low_ > 0xFFFFFFFFull) PropagateCarry();
  Normalize();
}

void RangeEncoder::PropagateCarry() {
  low_ &= 0xFFFFFFFFull;
  for (size_t i = out_.size(); i-- > 0;) {
    if (++out_[i] != 0) return;
  }
}

void RangeEncoder::Normalize() {
  while (range_ < kTop) {
    out_.push_back(static_cast<uint8_t>(low_ >> 24));
    low_ = (low_ << 8) & 0xFFFFFFFFull;
    range_ <<= 8;
  }
}

std::vector<uint8_t> RangeEncoder::Finish() {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out_.push_back(static_cast<uint8_t>(low_ >> shift));
  }
  return std::move(out_);
}

RangeDecoder::RangeDecoder(std::span<const uint8_t> data) : data_(data) {
  for (int i = 0; i < 4; ++i) code_ = (code_ << 8) | NextByte();
}

uint8_t RangeDecoder::NextByte() {
  if (pos_ >= data_.size()) {
    overrun_ = true;
    ++pos_;
    return 0;
  }
  return data_[pos_++];
}

void RangeDecoder::Normalize() {
  while (range_ < kTop) {
    code_ = (code_ << 8) | NextByte();
    range_ <<= 8;
  }
}

int RangeDecoder::DecodeSymbol(Cdf cdf) {
  const uint32_t r = range_ >> kProbBits;
  const uint32_t target = std::min(code_ / r, kProbTotal - 1);
  // First entry strictly greater than target, minus one.
  const auto it = std::upper_bound(cdf.begin() + 1, cdf.end() - 1, target);
  const int symbol = static_cast<int>(it - cdf.begin()) - 1;
  code_ -= r * cdf[symbol];
  range_ = r * (cdf[symbol + 1] - cdf[symbol]);
  Normalize();
  return symbol;
}

uint32_t RangeDecoder::DecodeBits(int nbits) {
  if (nbits < 1 || nbits > 16) throw std::invalid_argument("raw bit count");
  const uint32_t r = range_ >> nbits;
  const uint32_t value = std::min(code_ / r, (1u << nbits) - 1);
  code_ -= r * value;
  range_ = r;
  Normalize();
  return value;
}

}  // namespace pvq
