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

#include "pvq/codec.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "pvq/bands.h"
#include "pvq/errors.h"
#include "pvq/kernels.h"

namespace pvq {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr int kMaxPulses = 1 << 17;
constexpr uint32_t kMaxIndex = 1u << 16;
constexpr uint32_t kMaxScalarMagnitude = 1u << 20;

constexpr uint8_t kFlagRobust = 1;
constexpr uint8_t kFlagMasking = 2;
constexpr uint8_t kFlagScalar = 4;
constexpr uint8_t kFlagReference = 8;

double Norm(std::span<const double> v) {
  double e = 0;
  for (double x : v) e += x * x;
  return std::sqrt(e);
}

double SquaredError(std::span<const double> a, std::span<const double> b) {
  double e = 0;
  for (size_t i = 0; i < a.size(); ++i) e += (a[i] - b[i]) * (a[i] - b[i]);
  return e;
}

void PutU16(uint8_t* p, uint32_t v) {
  p[0] = static_cast<uint8_t>(v);
  p[1] = static_cast<uint8_t>(v >> 8);
}

uint32_t GetU16(const uint8_t* p) { return p[0] | (p[1] << 8); }

uint32_t GetU32(const uint8_t* p) {
  return p[0] | (p[1] << 8) | (p[2] << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

// Stand-in predictor for a reference band whose predictor is all zero on
// the decoder side (only possible when the reference differs from the
// encoder's).
Reflector FallbackReflector(int n) {
  std::vector<double> r(n, 0.0);
  r[0] = 1.0;
  return *ComputeReflector(r);
}

template <class Enc>
void WriteBand(Enc& enc, CodingModels& models, const BandDecision& decision,
               std::span<const double> predictor, const BandContext& ctx) {
  const BandRecord& rec = decision.record;
  const int b = ctx.band;
  if (ctx.reference_present) models.noref[b].Encode(enc, rec.noref);
  if (!rec.noref) {
    const int predicted = PredictGamma(predictor, ctx.params);
    models.gain_residual[b].EncodeSigned(enc, rec.gamma - predicted);
    models.theta[b].Encode(enc, static_cast<uint32_t>(rec.tau));
  } else {
    models.gain_direct[b].Encode(enc, static_cast<uint32_t>(rec.gamma));
  }
  if (rec.pulses > 0) {
    EncodePulseVector(enc, models.pulses[b], decision.codeword.coeffs(),
                      rec.pulses);
  }
}

class BandSearch {
 public:
  BandSearch(std::span<const double> x, std::span<const double> predictor,
             const BandContext& ctx)
      : x_(x), ctx_(ctx), n_(static_cast<int>(x.size())) {
    gain_ = Norm(x);
    gamma0_ = QuantizeGain(gain_, ctx.params);
    if (ctx.reference_present && predictor.size() == x.size()) {
      reflector_ = ComputeReflector(predictor);
    }
    if (reflector_ && gain_ > 0) {
      reflected_ = ApplyReflection(x, *reflector_);
      theta_ = ComputeTheta(reflected_, *reflector_);
    }
  }

  int gamma0() const { return gamma0_; }

  // Reference path is open when the predictor is usable and positively
  // correlated with the input.
  bool reference_usable() const {
    return reflector_.has_value() && gain_ > 0 && theta_ <= kHalfPi;
  }

  int NearestTau(int gamma) const {
    return QuantizeTheta(theta_, ComputeThetaStep(gamma, ctx_.params));
  }

  BandDecision NoReference(int gamma) const {
    BandDecision d;
    d.record = BaseRecord();
    d.record.noref = true;
    d.record.gamma = gamma;
    d.record.codeword_dims = n_;
    d.record.pulses = ComputePulses(gamma, 0, n_, ctx_.params, false);
    d.codeword = d.record.pulses > 0 ? SearchPulses(x_, d.record.pulses)
                                     : PulseVector::Zero(n_);
    d.reconstruction =
        RebuildBand(d.record, d.codeword, reflector_, ctx_.params);
    return d;
  }

  BandDecision WithReference(int gamma, int tau) const {
    BandDecision d;
    d.record = BaseRecord();
    d.record.noref = false;
    d.record.gamma = gamma;
    d.record.tau = tau;
    d.record.codeword_dims = n_ - 1;
    d.record.pulses = ComputePulses(gamma, tau, n_ - 1, ctx_.params, true);
    if (d.record.pulses > 0) {
      const std::vector<double> rest = DropAxis(reflected_, *reflector_);
      d.codeword = SearchPulses(rest, d.record.pulses);
    } else {
      d.codeword = PulseVector::Zero(n_ - 1);
    }
    d.reconstruction =
        RebuildBand(d.record, d.codeword, reflector_, ctx_.params);
    return d;
  }

 private:
  BandRecord BaseRecord() const {
    BandRecord rec;
    rec.band = ctx_.band;
    rec.size = n_;
    return rec;
  }

  std::span<const double> x_;
  const BandContext& ctx_;
  int n_;
  double gain_ = 0;
  int gamma0_ = 0;
  std::optional<Reflector> reflector_;
  std::vector<double> reflected_;
  double theta_ = 0;
};

BandDecision QuantizeScalarBand(std::span<const double> x, int band,
                                double qg) {
  const int n = static_cast<int>(x.size());
  BandDecision d;
  d.record.band = band;
  d.record.size = n;
  d.record.vector_quantized = false;
  d.record.codeword_dims = n;
  std::vector<int32_t> q(n);
  int pulses = 0;
  d.reconstruction.resize(n);
  for (int i = 0; i < n; ++i) {
    q[i] = static_cast<int32_t>(std::lround(x[i] / qg));
    pulses += std::abs(q[i]);
    d.reconstruction[i] = q[i] * qg;
  }
  d.codeword = PulseVector(std::move(q), pulses);
  return d;
}

void WriteScalarBand(RangeEncoder& enc, CodingModels& models,
                     const BandDecision& d) {
  const int b = d.record.band;
  const bool nonzero = d.codeword.pulses() > 0;
  models.scalar_nonzero[b].Encode(enc, nonzero);
  if (!nonzero) return;
  for (int32_t q : d.codeword.coeffs()) {
    models.scalar_magnitude[b].Encode(enc, static_cast<uint32_t>(std::abs(q)));
    if (q != 0) enc.EncodeBits(q < 0 ? 1 : 0, 1);
  }
}

BandDecision ReadScalarBand(RangeDecoder& dec, CodingModels& models, int band,
                            int n, double qg) {
  BandDecision d;
  d.record.band = band;
  d.record.size = n;
  d.record.vector_quantized = false;
  d.record.codeword_dims = n;
  std::vector<int32_t> q(n, 0);
  int pulses = 0;
  if (models.scalar_nonzero[band].Decode(dec)) {
    for (int i = 0; i < n; ++i) {
      uint32_t mag = models.scalar_magnitude[band].Decode(dec);
      if (mag > kMaxScalarMagnitude) {
        dec.MarkCorrupt();
        mag = kMaxScalarMagnitude;
      }
      if (mag != 0) {
        q[i] = dec.DecodeBits(1) ? -static_cast<int32_t>(mag)
                                 : static_cast<int32_t>(mag);
      }
      pulses += static_cast<int>(mag);
      if (dec.corrupt()) throw CorruptStreamError("corrupt scalar band");
    }
  }
  d.reconstruction.resize(n);
  for (int i = 0; i < n; ++i) d.reconstruction[i] = q[i] * qg;
  d.codeword = PulseVector(std::move(q), pulses);
  return d;
}

uint16_t QuantizeQg(double qg) {
  if (!std::isfinite(qg) || qg < 1.0 || qg > 4095.0) {
    throw std::invalid_argument("Qg must be in [1, 4095]");
  }
  return static_cast<uint16_t>(std::lround(qg * 16.0));
}

// DC index of the block to the left, else above, else 0.
int PredictDc(const std::vector<BlockTrace>& blocks, int index, int blocks_x) {
  if (index % blocks_x != 0) return blocks[index - 1].dc_index;
  if (index >= blocks_x) return blocks[index - blocks_x].dc_index;
  return 0;
}

void CheckReference(const Image* reference, int width, int height) {
  if (reference != nullptr &&
      (reference->width != width || reference->height != height)) {
    throw std::invalid_argument("reference dimensions differ from frame");
  }
}

}  // namespace

const char* ModeName(QuantizerMode mode) {
  return mode == QuantizerMode::kPvq ? "pvq" : "scalar";
}

MaskingParams StreamHeader::masking_params() const {
  return MaskingForBlock(block_size, masking, qg(), robust);
}

std::array<uint8_t, kHeaderBytes> SerializeHeader(const StreamHeader& h) {
  std::array<uint8_t, kHeaderBytes> out{};
  std::copy(kMagic.begin(), kMagic.end(), out.begin());
  PutU16(&out[4], static_cast<uint32_t>(h.width));
  PutU16(&out[6], static_cast<uint32_t>(h.height));
  out[8] = static_cast<uint8_t>(h.block_size);
  out[9] = (h.robust ? kFlagRobust : 0) | (h.masking ? kFlagMasking : 0) |
           (h.mode == QuantizerMode::kScalar ? kFlagScalar : 0) |
           (h.has_reference ? kFlagReference : 0);
  PutU16(&out[10], h.qg_q4);
  return out;
}

StreamHeader ParseHeader(std::span<const uint8_t> data) {
  if (data.size() < kHeaderBytes) throw CorruptStreamError("short header");
  if (!std::equal(kMagic.begin(), kMagic.end(), data.begin())) {
    throw CorruptStreamError("bad magic");
  }
  StreamHeader h;
  h.width = static_cast<int>(GetU16(&data[4]));
  h.height = static_cast<int>(GetU16(&data[6]));
  h.block_size = data[8];
  const uint8_t flags = data[9];
  h.robust = flags & kFlagRobust;
  h.masking = flags & kFlagMasking;
  h.mode = (flags & kFlagScalar) ? QuantizerMode::kScalar : QuantizerMode::kPvq;
  h.has_reference = flags & kFlagReference;
  h.qg_q4 = static_cast<uint16_t>(GetU16(&data[10]));
  if (h.width == 0 || h.height == 0) throw CorruptStreamError("zero size");
  if (!IsSupportedBlockSize(h.block_size)) {
    throw CorruptStreamError("bad block size");
  }
  if ((flags & ~0x0F) != 0) throw CorruptStreamError("unknown flags");
  if (h.qg_q4 < 16) throw CorruptStreamError("bad Qg");
  return h;
}

int BandRecord::DegreesOfFreedom() const {
  if (!vector_quantized) return codeword_dims;
  return 1 + (has_angle() ? 1 : 0) + (codeword_dims - 1);
}

int PredictGamma(std::span<const double> predictor, const MaskingParams& p) {
  return QuantizeGain(Norm(predictor), p);
}

std::vector<double> RebuildBand(const BandRecord& record,
                                const PulseVector& codeword,
                                const std::optional<Reflector>& reflector,
                                const MaskingParams& p) {
  const int n = record.size;
  if (record.gamma <= 0) return std::vector<double>(n, 0.0);
  const double gain = DequantizeGain(record.gamma, p);
  std::vector<double> shape = Normalize(codeword);
  if (record.noref) {
    for (double& v : shape) v *= gain;
    return shape;
  }
  const Reflector ref = reflector ? *reflector : FallbackReflector(n);
  const ThetaStep step = ComputeThetaStep(record.gamma, p);
  const double theta = std::min(DequantizeTheta(record.tau, step), kHalfPi);
  return Reconstruct(gain, theta, shape, ref);
}

double EstimateBandBits(const BandDecision& decision,
                        std::span<const double> predictor,
                        const BandContext& ctx, const CodingModels& models) {
  BitCounter counter;
  CodingModels scratch = models;
  WriteBand(counter, scratch, decision, predictor, ctx);
  return counter.bits();
}

BandDecision RdoBand(std::span<const double> x,
                     std::span<const double> predictor, const BandContext& ctx,
                     const CodingModels& models, double lambda) {
  if (!(lambda >= 0)) throw std::invalid_argument("lambda must be >= 0");
  const BandSearch search(x, predictor, ctx);
  const int g0 = search.gamma0();

  if (lambda == 0) {
    if (search.reference_usable() && g0 >= 1) {
      return search.WithReference(g0, search.NearestTau(g0));
    }
    return search.NoReference(g0);
  }

  std::optional<BandDecision> best;
  double best_cost = std::numeric_limits<double>::infinity();
  const auto consider = [&](BandDecision d) {
    const double cost = SquaredError(x, d.reconstruction) +
                        lambda * EstimateBandBits(d, predictor, ctx, models);
    if (cost < best_cost) {
      best_cost = cost;
      best = std::move(d);
    }
  };

  if (search.reference_usable()) {
    for (int gamma : {g0, g0 - 1, g0 + 1}) {
      if (gamma < 1) continue;
      const int t0 = search.NearestTau(gamma);
      const int t_max = ComputeThetaStep(gamma, ctx.params).max_index;
      for (int tau : {t0, t0 - 1, t0 + 1}) {
        if (tau < 0 || tau > t_max) continue;
        consider(search.WithReference(gamma, tau));
      }
    }
  }
  std::vector<int> gammas;
  for (int gamma : {g0, g0 - 1, g0 + 1, 0}) {
    if (gamma >= 0 &&
        std::find(gammas.begin(), gammas.end(), gamma) == gammas.end()) {
      gammas.push_back(gamma);
    }
  }
  for (int gamma : gammas) consider(search.NoReference(gamma));
  return std::move(*best);
}

BandDecision EncodeBand(std::span<const double> x,
                        std::span<const double> predictor,
                        const BandContext& ctx, CodingModels& models,
                        RangeEncoder& enc, double lambda) {
  BandDecision decision = RdoBand(x, predictor, ctx, models, lambda);
  WriteBand(enc, models, decision, predictor, ctx);
  return decision;
}

BandDecision DecodeBand(std::span<const double> predictor, int band_size,
                        const BandContext& ctx, CodingModels& models,
                        RangeDecoder& dec) {
  const int b = ctx.band;
  BandDecision d;
  BandRecord& rec = d.record;
  rec.band = b;
  rec.size = band_size;
  rec.noref = ctx.reference_present ? models.noref[b].Decode(dec) : true;
  if (!rec.noref) {
    const int64_t predicted = PredictGamma(predictor, ctx.params);
    const int64_t gamma = predicted + models.gain_residual[b].DecodeSigned(dec);
    const uint32_t tau = models.theta[b].Decode(dec);
    if (tau > kMaxIndex || gamma > kMaxIndex) {
      throw CorruptStreamError("band index out of range");
    }
    rec.gamma = static_cast<int>(std::max<int64_t>(gamma, 0));
    rec.tau = static_cast<int>(tau);
    rec.codeword_dims = band_size - 1;
    rec.pulses =
        ComputePulses(rec.gamma, rec.tau, rec.codeword_dims, ctx.params, true);
  } else {
    const uint32_t gamma = models.gain_direct[b].Decode(dec);
    if (gamma > kMaxIndex) throw CorruptStreamError("gain out of range");
    rec.gamma = static_cast<int>(gamma);
    rec.codeword_dims = band_size;
    rec.pulses = ComputePulses(rec.gamma, 0, band_size, ctx.params, false);
  }
  if (rec.pulses > kMaxPulses) throw CorruptStreamError("pulse count");
  if (dec.corrupt()) throw CorruptStreamError("corrupt band header");
  d.codeword = rec.pulses > 0 ? DecodePulseVector(dec, models.pulses[b],
                                                  rec.pulses, rec.codeword_dims)
                              : PulseVector::Zero(rec.codeword_dims);
  std::optional<Reflector> reflector;
  if (!rec.noref && predictor.size() == static_cast<size_t>(band_size)) {
    reflector = ComputeReflector(predictor);
  }
  d.reconstruction = RebuildBand(rec, d.codeword, reflector, ctx.params);
  return d;
}

EncodeResult EncodeImage(const Image& frame, const Image* reference,
                         const EncoderConfig& config) {
  if (frame.width <= 0 || frame.height <= 0 || frame.width > 0xFFFF ||
      frame.height > 0xFFFF ||
      frame.pixels.size() != static_cast<size_t>(frame.width) * frame.height) {
    throw std::invalid_argument("invalid frame dimensions");
  }
  if (!IsSupportedBlockSize(config.block_size)) {
    throw std::invalid_argument("block size must be 4, 8 or 16");
  }
  if (!(config.lambda >= 0)) throw std::invalid_argument("lambda must be >= 0");
  CheckReference(reference, frame.width, frame.height);

  StreamHeader header;
  header.width = frame.width;
  header.height = frame.height;
  header.block_size = config.block_size;
  header.robust = config.robust;
  header.masking = config.masking;
  header.mode = config.mode;
  header.has_reference = reference != nullptr;
  header.qg_q4 = QuantizeQg(config.qg);
  const double qg = header.qg();
  const MaskingParams params = header.masking_params();
  const BandLayout& layout = GetBandLayout(config.block_size);

  const CoefficientPlane plane = ForwardDctPlane(frame, config.block_size);
  CoefficientPlane ref_plane;
  if (reference) ref_plane = ForwardDctPlane(*reference, config.block_size);
  CoefficientPlane recon(plane.block_size, plane.blocks_x, plane.blocks_y);

  RangeEncoder enc;
  CodingModels models;
  EncodeResult result;
  result.blocks.resize(plane.num_blocks());
  for (int i = 0; i < plane.num_blocks(); ++i) {
    BlockTrace& trace = result.blocks[i];
    const std::span<const double> coeffs = plane.block(i);
    const std::span<double> out = recon.block(i);

    trace.dc_index = static_cast<int>(std::lround(coeffs[0] / qg));
    models.dc.EncodeSigned(
        enc, trace.dc_index - PredictDc(result.blocks, i, plane.blocks_x));
    out[0] = trace.dc_index * qg;

    for (int b = 0; b < layout.num_bands(); ++b) {
      const std::vector<double> x = ExtractBand(coeffs, layout, b);
      BandDecision decision;
      if (config.mode == QuantizerMode::kScalar) {
        decision = QuantizeScalarBand(x, b, qg);
        WriteScalarBand(enc, models, decision);
      } else {
        std::vector<double> r;
        if (reference) r = ExtractBand(ref_plane.block(i), layout, b);
        const BandContext ctx{b, params, reference != nullptr};
        decision = EncodeBand(x, r, ctx, models, enc, config.lambda);
      }
      ScatterBand(decision.reconstruction, layout, b, out);
      trace.bands.push_back(decision.record);
    }
    trace.stream_position = enc.position();
  }

  const std::vector<uint8_t> payload = enc.Finish();
  const auto head = SerializeHeader(header);
  result.bitstream.assign(head.begin(), head.end());
  result.bitstream.insert(result.bitstream.end(), payload.begin(),
                          payload.end());
  const uint32_t length = static_cast<uint32_t>(payload.size());
  for (int shift = 0; shift < 32; shift += 8) {
    result.bitstream.push_back(static_cast<uint8_t>(length >> shift));
  }
  result.reconstruction = InverseDctPlane(recon, frame.width, frame.height);
  return result;
}

DecodeResult DecodeImageTraced(std::span<const uint8_t> bitstream,
                               const Image* reference) {
  DecodeResult result;
  result.header = ParseHeader(bitstream);
  const StreamHeader& header = result.header;
  if (bitstream.size() < kHeaderBytes + kTrailerBytes) {
    throw CorruptStreamError("truncated stream");
  }
  const size_t payload_size = bitstream.size() - kHeaderBytes - kTrailerBytes;
  if (GetU32(&bitstream[bitstream.size() - kTrailerBytes]) != payload_size) {
    throw CorruptStreamError("stream length mismatch (truncated?)");
  }
  if (header.has_reference != (reference != nullptr)) {
    throw std::invalid_argument(header.has_reference
                                    ? "stream needs a reference frame"
                                    : "stream was coded without a reference");
  }
  CheckReference(reference, header.width, header.height);

  const double qg = header.qg();
  const MaskingParams params = header.masking_params();
  const BandLayout& layout = GetBandLayout(header.block_size);
  const int blocks_x =
      (header.width + header.block_size - 1) / header.block_size;
  const int blocks_y =
      (header.height + header.block_size - 1) / header.block_size;
  CoefficientPlane recon(header.block_size, blocks_x, blocks_y);
  CoefficientPlane ref_plane;
  if (reference) ref_plane = ForwardDctPlane(*reference, header.block_size);

  RangeDecoder dec(bitstream.subspan(kHeaderBytes, payload_size));
  CodingModels models;
  result.blocks.resize(recon.num_blocks());
  for (int i = 0; i < recon.num_blocks(); ++i) {
    BlockTrace& trace = result.blocks[i];
    const std::span<double> out = recon.block(i);
    const int64_t predicted = PredictDc(result.blocks, i, blocks_x);
    const int64_t dc = predicted + models.dc.DecodeSigned(dec);
    if (dc < -(1 << 20) || dc > (1 << 20)) throw CorruptStreamError("bad DC");
    trace.dc_index = static_cast<int>(dc);
    out[0] = trace.dc_index * qg;

    for (int b = 0; b < layout.num_bands(); ++b) {
      BandDecision decision;
      if (header.mode == QuantizerMode::kScalar) {
        decision = ReadScalarBand(dec, models, b, layout.band_size(b), qg);
      } else {
        std::vector<double> r;
        if (reference) r = ExtractBand(ref_plane.block(i), layout, b);
        const BandContext ctx{b, params, reference != nullptr};
        decision = DecodeBand(r, layout.band_size(b), ctx, models, dec);
      }
      ScatterBand(decision.reconstruction, layout, b, out);
      trace.bands.push_back(decision.record);
    }
    if (dec.corrupt()) throw CorruptStreamError("payload overrun or invalid");
    trace.stream_position = dec.position();
  }
  if (dec.position() != payload_size) {
    throw CorruptStreamError("payload size does not match decoded symbols");
  }
  result.image = InverseDctPlane(recon, header.width, header.height);
  return result;
}

Image DecodeImage(std::span<const uint8_t> bitstream, const Image* reference) {
  return DecodeImageTraced(bitstream, reference).image;
}

}  // namespace pvq
