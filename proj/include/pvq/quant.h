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

#ifndef PVQ_QUANT_H_
#define PVQ_QUANT_H_

// Scalar quantizers for gain and angle, and the rule that derives the pulse
// count K from already-decoded indices so K never has to be transmitted.

namespace pvq {

inline constexpr double kMaskingAlpha = 1.0 / 3.0;

struct MaskingParams {
  double alpha = 0.0;  // contrast masking exponent
  double beta = 1.0;   // 1 / (1 - alpha)
  double qg = 1.0;     // master gain resolution
  bool robust = false;

  // Throws std::invalid_argument unless 0 <= alpha < 1 and qg > 0.
  static MaskingParams Make(double alpha, double qg, bool robust);
};

// Masking policy: 4x4 blocks are treated as edges (alpha = 0), 8x8 and
// larger as texture (alpha = 1/3) when masking is enabled.
MaskingParams MaskingForBlock(int block_size, bool masking, double qg,
                              bool robust);

// gamma = round((g / Qg)^(1/beta)).
int QuantizeGain(double gain, const MaskingParams& p);

// g_hat = Qg gamma^beta.
double DequantizeGain(int gamma, const MaskingParams& p);

// Local gain step d(g_hat)/d(gamma) = Qg beta gamma^(beta-1).
double GainStep(int gamma, const MaskingParams& p);

struct ThetaStep {
  double step = 0;    // Q_theta, an integer fraction of pi/2
  int max_index = 0;  // tau in [0, max_index]
};

// Angle resolution matched to the gain resolution, beta / gamma, rounded to
// pi / (2 T). Requires gamma >= 1.
ThetaStep ComputeThetaStep(int gamma, const MaskingParams& p);

// tau = clamp(round(theta / step), 0, max_index).
int QuantizeTheta(double theta, const ThetaStep& step);

inline double DequantizeTheta(int tau, const ThetaStep& step) {
  return tau * step.step;
}

// Pulse count for a band. `dims` is the codeword dimension (N - 1 with a
// reference, N without). With a reference and robust mode, K depends on tau
// only. Returns 0 when gamma == 0, or tau == 0 with a reference.
int ComputePulses(int gamma, int tau, int dims, const MaskingParams& p,
                  bool has_reference);

}  // namespace pvq

#endif  // PVQ_QUANT_H_
