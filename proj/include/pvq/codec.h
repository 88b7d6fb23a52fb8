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

#ifndef PVQ_CODEC_H_
#define PVQ_CODEC_H_

// Intra/inter frame codec built on gain-shape PVQ.
//
// Per block: the DC index (uniform step Qg, predicted from the left
// neighbour) followed by each band. Per band the signaling order is
//   [noref flag, when the frame has a reference]
//   gain index (residual against the predictor's gain unless noref)
//   [theta index, unless noref]
//   [pulse vector, when the derived K > 0]
// K is never transmitted; both sides derive it from decoded indices.
//
// Container: "PVQ1", u16 width, u16 height, u8 block size, u8 flags
// (bit0 robust, bit1 masking, bit2 scalar mode, bit3 has reference),
// u16 Qg * 16, range-coded payload, u32 payload length. All little-endian.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pvq/codebook.h"
#include "pvq/entropy.h"
#include "pvq/image.h"
#include "pvq/quant.h"
#include "pvq/reflection.h"

namespace pvq {

enum class QuantizerMode : uint8_t { kPvq = 0, kScalar = 1 };

const char* ModeName(QuantizerMode mode);

struct EncoderConfig {
  double qg = 8.0;  // stored with 1/16 precision; must be in [1, 4095]
  int block_size = 8;
  bool robust = false;
  bool masking = true;
  QuantizerMode mode = QuantizerMode::kPvq;
  double lambda = 0.0;  // 0 selects nearest-neighbour quantization
};

inline constexpr std::array<uint8_t, 4> kMagic = {'P', 'V', 'Q', '1'};
inline constexpr size_t kHeaderBytes = 12;
inline constexpr size_t kTrailerBytes = 4;
inline constexpr int kMaxBands = 7;

struct StreamHeader {
  int width = 0;
  int height = 0;
  int block_size = 8;
  bool robust = false;
  bool masking = true;
  QuantizerMode mode = QuantizerMode::kPvq;
  bool has_reference = false;
  uint16_t qg_q4 = 0;

  double qg() const { return qg_q4 / 16.0; }
  MaskingParams masking_params() const;
};

std::array<uint8_t, kHeaderBytes> SerializeHeader(const StreamHeader& header);
// Throws CorruptStreamError on bad magic, short input or invalid fields.
StreamHeader ParseHeader(std::span<const uint8_t> data);

// Adaptive models for one frame. Per-band contexts are indexed by the band's
// position in its block's layout.
struct CodingModels {
  AdaptiveLaplace dc{8 * kOneQ8};
  std::array<AdaptiveBit, kMaxBands> noref{};
  std::array<AdaptiveLaplace, kMaxBands> gain_direct;
  std::array<AdaptiveLaplace, kMaxBands> gain_residual;
  std::array<AdaptiveLaplace, kMaxBands> theta;
  std::array<PulseModels, kMaxBands> pulses{};
  std::array<AdaptiveBit, kMaxBands> scalar_nonzero{};
  std::array<AdaptiveLaplace, kMaxBands> scalar_magnitude;

  bool operator==(const CodingModels&) const = default;
};

// What was signaled for one band.
struct BandRecord {
  int band = 0;
  int size = 0;
  bool vector_quantized = true;  // false in scalar mode
  bool noref = true;
  int gamma = 0;
  int tau = 0;
  int pulses = 0;
  int codeword_dims = 0;

  bool has_angle() const { return vector_quantized && !noref; }
  // Gain + angle + the codeword's free directions (its dimension minus the
  // unit-norm constraint); scalar bands carry one per coefficient.
  int DegreesOfFreedom() const;

  bool operator==(const BandRecord&) const = default;
};

struct BandDecision {
  BandRecord record;
  PulseVector codeword;
  std::vector<double> reconstruction;
};

struct BandContext {
  int band = 0;
  MaskingParams params;
  bool reference_present = false;  // frame is coded against a reference
};

// Gain index the decoder expects from the predictor band.
int PredictGamma(std::span<const double> predictor, const MaskingParams& p);

// Band reconstruction shared by encoder and decoder. `reflector` is ignored
// for noref bands; if absent for a reference band, the first axis is used.
std::vector<double> RebuildBand(const BandRecord& record,
                                const PulseVector& codeword,
                                const std::optional<Reflector>& reflector,
                                const MaskingParams& p);

// Chooses gamma, theta index, noref and codeword for a band. With
// lambda == 0 this is nearest-neighbour quantization; otherwise gamma in
// {0, g0 - 1, g0, g0 + 1} and tau in {t0 - 1, t0, t0 + 1} are scored by
// D + lambda R with R estimated from `models` (not modified).
BandDecision RdoBand(std::span<const double> x,
                     std::span<const double> predictor, const BandContext& ctx,
                     const CodingModels& models, double lambda);

// Rate in bits of writing `decision` with the given models.
double EstimateBandBits(const BandDecision& decision,
                        std::span<const double> predictor,
                        const BandContext& ctx, const CodingModels& models);

BandDecision EncodeBand(std::span<const double> x,
                        std::span<const double> predictor,
                        const BandContext& ctx, CodingModels& models,
                        RangeEncoder& enc, double lambda);

BandDecision DecodeBand(std::span<const double> predictor, int band_size,
                        const BandContext& ctx, CodingModels& models,
                        RangeDecoder& dec);

// Per-block side information, recorded by both encoder and decoder.
struct BlockTrace {
  int dc_index = 0;
  // Coder position after the block: bytes emitted (encoder) or consumed
  // (decoder).
  size_t stream_position = 0;
  std::vector<BandRecord> bands;
};

struct EncodeResult {
  std::vector<uint8_t> bitstream;
  Image reconstruction;
  std::vector<BlockTrace> blocks;
};

struct DecodeResult {
  StreamHeader header;
  Image image;
  std::vector<BlockTrace> blocks;
};

// `reference`, when non-null, must match the frame's dimensions.
// Throws std::invalid_argument on invalid configuration or dimensions.
EncodeResult EncodeImage(const Image& frame, const Image* reference,
                         const EncoderConfig& config);

// Throws CorruptStreamError for malformed streams and std::invalid_argument
// when the reference does not match the header.
DecodeResult DecodeImageTraced(std::span<const uint8_t> bitstream,
                               const Image* reference);
Image DecodeImage(std::span<const uint8_t> bitstream, const Image* reference);

}  // namespace pvq

#endif  // PVQ_CODEC_H_
