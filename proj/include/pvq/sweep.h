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

#ifndef PVQ_SWEEP_H_
#define PVQ_SWEEP_H_

// Rate-distortion sweeps over a corpus, emitted as CSV.

#include <filesystem>
#include <string>
#include <vector>

#include "pvq/codec.h"
#include "pvq/synthetic.h"

namespace pvq {

enum class ReferencePolicy { kNone, kSelf };

struct RdPoint {
  std::string image;
  QuantizerMode mode = QuantizerMode::kPvq;
  double qg = 0;
  double bpp = 0;
  double psnr = 0;
  double ssim = 0;
};

struct SweepOptions {
  std::vector<double> qgs;
  std::vector<QuantizerMode> modes;
  ReferencePolicy reference = ReferencePolicy::kNone;
  int block_size = 8;
  bool masking = true;
  bool robust = false;
  double lambda = 0;
};

struct SweepResult {
  std::vector<RdPoint> points;  // sorted by (image, mode, qg)
  std::vector<std::string> warnings;
};

// Every (image, Qg, mode) job is independent and runs in parallel; the
// output order does not depend on scheduling.
SweepResult RdSweep(const std::vector<NamedImage>& images,
                    const SweepOptions& options);

// Loads every .pgm / .y4m file in `corpus` (sorted by name, image id = file
// stem). Unreadable files are skipped and reported in `warnings`.
SweepResult RdSweepDirectory(const std::filesystem::path& corpus,
                             const SweepOptions& options);

// Header "image,mode,qg,bpp,psnr,ssim" followed by one line per point.
std::string FormatRdCsv(const std::vector<RdPoint>& points);

// Mean local gain step Qg beta gamma^(beta-1) over the vector-quantized
// bands with a non-zero gain. This is the effective quantizer resolution the
// masking model assigned; 0 if no band qualifies.
double MeanGainStep(const StreamHeader& header,
                    const std::vector<BlockTrace>& blocks);

}  // namespace pvq

#endif  // PVQ_SWEEP_H_
