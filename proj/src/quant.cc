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

#include "pvq/quant.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pvq/codebook.h"

namespace pvq {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

int RoundPulses(double k, bool nonzero_promised) {
  if (!(k > 0)) return 0;
  const int rounded = static_cast<int>(std::lround(k));
  return (rounded == 0 && nonzero_promised) ? 1 : rounded;
}

}  // namespace

MaskingParams MaskingParams::Make(double alpha, double qg, bool robust) {
  if (!(alpha >= 0 && alpha < 1)) {
    throw std::invalid_argument("masking alpha must be in [0, 1)");
  }
  if (!(qg > 0) || !std::isfinite(qg)) {
    throw std::invalid_argument("Qg must be positive");
  }
  // 1 / (1 - 1/3) rounds to just under 1.5; snap so that lattice points
  // such as Qg * 4^1.5 are exact.
  double beta = 1.0 / (1.0 - alpha);
  const double snapped = std::round(beta * 4096.0) / 4096.0;
  if (std::abs(beta - snapped) < 1e-12) beta = snapped;
  return MaskingParams{alpha, beta, qg, robust};
}

MaskingParams MaskingForBlock(int block_size, bool masking, double qg,
                              bool robust) {
  const double alpha = (masking && block_size >= 8) ? kMaskingAlpha : 0.0;
  return MaskingParams::Make(alpha, qg, robust);
}

int QuantizeGain(double gain, const MaskingParams& p) {
  if (!(gain > 0)) return 0;
  return static_cast<int>(std::lround(std::pow(gain / p.qg, 1.0 / p.beta)));
}

double DequantizeGain(int gamma, const MaskingParams& p) {
  if (gamma <= 0) return 0.0;
  return p.qg * std::pow(static_cast<double>(gamma), p.beta);
}

double GainStep(int gamma, const MaskingParams& p) {
  if (gamma <= 0) return p.qg;
  return p.qg * p.beta * std::pow(static_cast<double>(gamma), p.beta - 1.0);
}

ThetaStep ComputeThetaStep(int gamma, const MaskingParams& p) {
  if (gamma < 1) throw std::invalid_argument("theta step needs gamma >= 1");
  const double raw = p.beta / gamma;
  const int steps = std::max(1, static_cast<int>(std::lround(kHalfPi / raw)));
  return ThetaStep{kHalfPi / steps, steps};
}

int QuantizeTheta(double theta, const ThetaStep& step) {
  const long tau = std::lround(theta / step.step);
  return static_cast<int>(std::clamp<long>(tau, 0, step.max_index));
}

int ComputePulses(int gamma, int tau, int dims, const MaskingParams& p,
                  bool has_reference) {
  const double resolution = std::sqrt((dims + kDistortionConstant - 2.0) / 2.0);
  // Robust K ignores gamma so a mispredicted gain cannot change how many
  // symbols the decoder reads.
  if (has_reference && p.robust) {
    return tau > 0 ? RoundPulses(tau * resolution, true) : 0;
  }
  if (gamma <= 0) return 0;
  if (!has_reference) {
    return RoundPulses(gamma / p.beta * resolution, true);
  }
  if (tau <= 0) return 0;
  const ThetaStep step = ComputeThetaStep(gamma, p);
  const double theta = std::min(DequantizeTheta(tau, step), kHalfPi);
  return RoundPulses(gamma * std::sin(theta) / p.beta * resolution, true);
}

}  // namespace pvq
