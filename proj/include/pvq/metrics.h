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

#ifndef PVQ_METRICS_H_
#define PVQ_METRICS_H_

#include "pvq/image.h"

namespace pvq {

inline constexpr double kPsnrCap = 99.0;

// 10 log10(255^2 / MSE), capped at kPsnrCap. Throws std::invalid_argument
// on a size mismatch.
double Psnr(const Image& a, const Image& b);

// Mean single-scale SSIM over 8x8 windows placed every 4 pixels, with
// C1 = (0.01 * 255)^2 and C2 = (0.03 * 255)^2. Frames smaller than a window
// use one window covering the frame. Symmetric in its arguments.
double Ssim(const Image& a, const Image& b);
double SsimSerial(const Image& a, const Image& b);

}  // namespace pvq

#endif  // PVQ_METRICS_H_
